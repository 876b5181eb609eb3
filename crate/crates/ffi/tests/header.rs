//! The generated header compiles as C and C++ against a small client.

use std::path::PathBuf;
use std::process::Command;

const CLIENT: &str = r#"
#include "hallkit.h"
#include <stdio.h>

int run(void) {
    HkTable *t = NULL;
    HkStatus st = hk_table_build("vertices 2\narrow 1 2\n", "2,2", 0, &t);
    if (st != HK_STATUS_OK) {
        fprintf(stderr, "%s\n", hk_last_error());
        return 1;
    }
    char *out = NULL;
    st = hk_mult(HK_ALGEBRA_SF, t, NULL, "s[[0,1]]", "s[[1,0]]", false, &out);
    if (st == HK_STATUS_OK) {
        puts(out);
        hk_string_free(out);
    }
    hk_table_free(t);
    return (int)st;
}
"#;

fn compiles(compiler: &str, ext: &str, std: &str) {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let src = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("client.{ext}"));
    std::fs::write(&src, CLIENT).unwrap();
    let status = match Command::new(compiler)
        .args(["-fsyntax-only", "-Wall", "-Werror", std, "-I"])
        .arg(dir.join("include"))
        .arg(&src)
        .status()
    {
        Ok(s) => s,
        Err(e) => {
            eprintln!("skipping: {compiler} unavailable ({e})");
            return;
        }
    };
    assert!(status.success(), "{compiler} rejected the header");
}

#[test]
fn header_is_valid_c() {
    compiles("cc", "c", "-std=c99");
}

#[test]
fn header_is_valid_cpp() {
    compiles("c++", "cpp", "-std=c++11");
}
