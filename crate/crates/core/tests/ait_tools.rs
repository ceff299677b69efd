use ait_core::ait::{
    complexity_upper_bound, enumerate_halting, enumerate_with, kraft_prefix_check_records,
    omega_lower_bound,
    records::{format_record, parse_record},
    ChaitinMachine, Dyadic, OutputTarget,
};
use ait_core::eliminator::BemMachine;
use ait_core::languages::iota_combinator;
use ait_core::term::{I, K};

fn machines() -> Vec<ChaitinMachine> {
    vec![
        ChaitinMachine::Simple,
        ChaitinMachine::Extended(iota_combinator()),
        ChaitinMachine::PfKeraia,
        ChaitinMachine::Eliminated(BemMachine::Keraia),
        ChaitinMachine::Eliminated(BemMachine::Blc),
    ]
}

#[test]
fn kraft_holds_on_a_grid() {
    for m in machines() {
        for (len, steps) in [(6, 100), (8, 1_000), (10, 10_000)] {
            let r = enumerate_halting(&m, len, steps);
            assert!(kraft_prefix_check_records(&r), "{m} ({len}, {steps})");
        }
    }
}

#[test]
fn bound_is_monotone_in_length_and_steps() {
    for m in machines() {
        let grid = [(6, 100), (6, 10_000), (9, 100), (9, 10_000)];
        let b: Vec<Dyadic> = grid
            .iter()
            .map(|&(l, s)| omega_lower_bound(&m, l, s).lower)
            .collect();
        assert!(b[0].value_le(&b[1]) && b[0].value_le(&b[2]), "{m}");
        assert!(b[1].value_le(&b[3]) && b[2].value_le(&b[3]), "{m}");
    }
}

#[test]
fn records_reserialize_to_the_same_bound() {
    let b = omega_lower_bound(&ChaitinMachine::PfKeraia, 10, 10_000);
    let lines: Vec<String> = b.records.iter().map(format_record).collect();
    let parsed: Vec<_> = lines.iter().map(|l| parse_record(l).unwrap()).collect();
    assert_eq!(parsed, b.records);
    assert_eq!(
        Dyadic::kraft_sum(parsed.iter().map(|r| &r.codeword), 10),
        b.lower
    );
}

#[test]
fn records_replay_exactly() {
    for m in [ChaitinMachine::Simple, ChaitinMachine::PfKeraia] {
        for r in enumerate_halting(&m, 9, 10_000) {
            let h = m.run(&r.codeword, 10_000);
            let h = h.halted().unwrap();
            assert_eq!(
                (h.steps, &h.bits, &h.serialized),
                (r.steps, &r.output_bits, &r.output_term)
            );
        }
    }
}

#[test]
fn complexity_is_antitone() {
    let targets = [OutputTarget::Term(K), OutputTarget::Term(I)];
    for m in [ChaitinMachine::Simple, ChaitinMachine::PfKeraia] {
        for t in &targets {
            let mut last: Option<usize> = None;
            for len in 2..=10 {
                let c = complexity_upper_bound(&m, t, len, 10_000);
                if let Some(prev) = last {
                    assert!(c.is_some_and(|c| c <= prev), "{m} {t:?}");
                }
                last = c.or(last);
            }
        }
    }
}

#[test]
fn parallel_enumeration_is_identical() {
    let a = enumerate_with(&ChaitinMachine::Simple, 11, 10_000, 1);
    let b = enumerate_with(&ChaitinMachine::Simple, 11, 10_000, 8);
    assert_eq!(a, b);
}

#[test]
fn pf_keraia_prefix_free_to_sixteen() {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let e = enumerate_with(&ChaitinMachine::PfKeraia, 16, 100_000, workers);
    assert!(kraft_prefix_check_records(&e.records));
}
