//! Compiles a C program against the generated header and the shared library.

use std::path::{Path, PathBuf};
use std::process::Command;

fn shared_library_dir() -> Option<PathBuf> {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().ok()?;
    let dir = exe.parent()?.parent()?.to_path_buf();
    dir.join("libhecke_wgraph_ffi.so").exists().then_some(dir)
}

#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include/hecke_wgraph.h");
    assert!(header.exists(), "header is generated by the build script");
    let Some(lib_dir) = shared_library_dir() else {
        eprintln!("skipping: shared library not found next to the test binary");
        return;
    };
    let Ok(cc) = which_cc() else {
        eprintln!("skipping: no C compiler");
        return;
    };
    let out_dir = tempfile_dir();
    let exe = out_dir.join("c_smoke");
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c_smoke.c"))
        .arg("-L")
        .arg(&lib_dir)
        .arg("-lhecke_wgraph_ffi")
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&exe).env("LD_LIBRARY_PATH", &lib_dir).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(
        String::from_utf8_lossy(&run.stdout).trim(),
        "order=24 vertices=3 json=1"
    );
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| {
            Command::new(c)
                .arg("--version")
                .output()
                .is_ok_and(|o| o.status.success())
        })
        .ok_or(())
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hecke-wgraph-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
