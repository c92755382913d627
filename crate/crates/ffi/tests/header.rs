use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(crate_dir().join("include/gdlab.h")).unwrap();
    for name in [
        "gd_structure_parse",
        "gd_structure_free",
        "gd_structure_to_json",
        "gd_check",
        "gd_report_passed",
        "gd_report_text",
        "gd_report_free",
        "gd_string_free",
        "gd_last_error",
        "typedef struct GdStructure GdStructure;",
        "GD_STATUS_PARSE = 3",
    ] {
        assert!(h.contains(name), "{name}");
    }
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let h = crate_dir().join("include/gdlab.h");
    for args in [&["-x", "c", "-std=c99"][..], &["-x", "c++"][..]] {
        let out = Command::new("cc").args(args).arg("-fsyntax-only").arg(&h).output().expect("cc runs");
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}

/// Links a small C program against the static library when cargo has produced one.
#[test]
fn c_program_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let target_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = target_dir.join("libgdlab_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let src = std::env::temp_dir().join(format!("gdlab-ffi-{}.c", std::process::id()));
    let bin = src.with_extension("bin");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "gdlab.h"
int main(void) {
    GdStructure *s = NULL;
    GdReport *r = NULL;
    char *text = NULL;
    if (gd_structure_parse("{\"dim\": 2, \"circ\": [[1, 2, 2, 1, 1]], \"delta0\": [[2, 1, 2, 1, 1], [2, 2, 1, -1, 1]]}", &s) != GD_STATUS_OK) return 1;
    if (gd_check(s, "gd-bialg", &r) != GD_STATUS_OK || !gd_report_passed(r)) return 2;
    if (gd_conformal_text(s, &text) != GD_STATUS_OK) return 3;
    fputs(text, stdout);
    gd_string_free(text);
    gd_report_free(r);
    gd_structure_free(s);
    if (gd_structure_parse("{", &s) != GD_STATUS_PARSE || strlen(gd_last_error()) == 0) return 4;
    return 0;
}
"#,
    )
    .unwrap();
    let out = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .expect("cc runs");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = Command::new(&bin).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&run.stdout).contains("[e1 _λ e2] = λ e2"));
}
