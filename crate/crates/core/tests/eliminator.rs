use ait_core::ait::kraft_prefix_check;
use ait_core::bits::BitString;
use ait_core::eliminator::{eliminate, BemMachine, ElimLimits};

fn inputs(max_len: usize) -> impl Iterator<Item = BitString> {
    (0..=max_len).flat_map(BitString::all_of_length)
}

#[test]
fn halting_sets_are_prefix_free() {
    for m in BemMachine::ALL {
        let e = eliminate(m, ElimLimits::uniform(20_000));
        let halting: Vec<BitString> = inputs(9).filter(|x| e.run(x).is_halted()).collect();
        assert!(kraft_prefix_check(&halting), "{m}: {halting:?}");
    }
}

#[test]
fn runs_are_deterministic() {
    for m in BemMachine::ALL {
        let e = eliminate(m, ElimLimits::uniform(5_000));
        for x in inputs(6) {
            assert_eq!(e.run_with_stats(&x), e.run_with_stats(&x), "{m} {x}");
        }
    }
}

#[test]
fn never_more_than_three_branches() {
    for m in BemMachine::ALL {
        let e = eliminate(m, ElimLimits::uniform(5_000));
        for x in inputs(7) {
            assert!(e.run_with_stats(&x).1.max_branches <= 3);
        }
    }
}

#[test]
fn keraia_eliminated_domain_holds_golden_programs() {
    let e = eliminate(BemMachine::Keraia, ElimLimits::uniform(100_000));
    for p in ["11000", "1100110101000", "11010100110010100"] {
        assert!(e.run(&p.parse().unwrap()).is_halted(), "{p}");
    }
}
