//! Compiles a small C program against the generated header and static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "ait.h"

int main(void) {
    AitOutcome *out = NULL;
    if (ait_run("pf-keraia", "1001", 10000, &out) != AIT_STATUS_OK) return 1;
    if (ait_outcome_status(out) != AIT_STATUS_OK) return 2;
    AitTerm *term = NULL;
    if (ait_outcome_term(out, &term) != AIT_STATUS_OK) return 3;
    char *text = NULL;
    if (ait_term_print(term, &text) != AIT_STATUS_OK) return 4;
    int ok = strcmp(text, "I") == 0;
    printf("%s\n", text);
    ait_string_free(text);
    ait_term_free(term);
    ait_outcome_free(out);
    if (ait_run("simple", "00", 10000, &out) != AIT_STATUS_OK) return 5;
    if (ait_outcome_status(out) != AIT_STATUS_OVERFLOW) return 6;
    ait_outcome_free(out);
    return ok ? 0 : 7;
}
"#;

fn target_dir() -> PathBuf {
    // tests/<exe> lives in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libait_ffi.a");
    assert!(
        lib.exists(),
        "static library not found at {}",
        lib.display()
    );
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let exe = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available as `cc`");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "I");
}
