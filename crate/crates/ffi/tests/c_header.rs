use std::path::PathBuf;
use std::process::Command;

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(manifest().join("include/triarray.h")).unwrap();
    for name in [
        "typedef struct TriTriangle TriTriangle;",
        "typedef struct TriPoset TriPoset;",
        "TriStatus_LadderViolation = 5",
        "tri_triangle_parse(",
        "tri_transform(",
        "tri_inverse_transform(",
        "tri_oracle(",
        "tri_poset_to_dot(",
        "tri_last_error_message(",
        "tri_string_free(",
    ] {
        assert!(h.contains(name), "missing {name}");
    }
}

/// Compiles the C smoke test against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    // a separate target directory avoids waiting on the lock held by the
    // enclosing cargo invocation
    let target = manifest().join("../../target/c-smoke");
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
    let built = Command::new(cargo)
        .args(["build", "--quiet", "-p", "triarray-ffi", "--lib", "--target-dir"])
        .arg(&target)
        .current_dir(manifest())
        .status()
        .unwrap();
    assert!(built.success(), "building the static library failed");
    let lib = target.join("debug").join("libtriarray_ffi.a");
    let out_dir = std::env::temp_dir().join(format!("triarray-ffi-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let exe = out_dir.join("smoke");
    let status = Command::new("cc")
        .arg(manifest().join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    let status = status.expect("a C compiler named cc");
    assert!(status.success(), "cc failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
    let _ = std::fs::remove_dir_all(&out_dir);
}
