use std::ffi::{CStr, CString};
use std::f64::consts::PI;
use std::ptr;

use reptile_lab_ffi::*;

fn last_error() -> String {
    let p = rl_last_error_message();
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { rl_string_free(p) };
    s
}

#[test]
fn edge_lengths_and_errors() {
    let mut out = [0.0; 3];
    let ok = unsafe { rl_spherical_edge_lengths([PI / 2.0; 3].as_ptr(), out.as_mut_ptr()) };
    assert_eq!(ok, RlStatus::Ok);
    assert!(out.iter().all(|x| (x - PI / 2.0).abs() < 1e-12));
    assert!(rl_last_error_message().is_null());

    let bad = unsafe { rl_spherical_edge_lengths([0.5; 3].as_ptr(), out.as_mut_ptr()) };
    assert_eq!(bad, RlStatus::InvalidArgument);
    assert!(last_error().contains("invalid spherical triangle"));

    let null = unsafe { rl_spherical_edge_lengths(ptr::null(), out.as_mut_ptr()) };
    assert_eq!(null, RlStatus::NullPointer);
}

#[test]
fn degrees() {
    let mut d = 0;
    for (k, want) in [(2, 4), (4, 2), (16, 1), (36, 2)] {
        assert_eq!(unsafe { rl_algebraic_degree(k, 4, &mut d) }, RlStatus::Ok);
        assert_eq!(d, want, "k = {k}");
    }
    assert_eq!(unsafe { rl_algebraic_degree(7, 1, &mut d) }, RlStatus::InvalidArgument);
}

#[test]
fn diagram_handles() {
    let d = reptile_lab::fixtures::diagram("k4-alpha-four-cycle").unwrap();
    let json = CString::new(serde_json::to_string(&d.to_fixture("k4-alpha-four-cycle")).unwrap()).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { rl_diagram_from_json(json.as_ptr(), &mut h) }, RlStatus::Ok);
    let mut n = 0;
    assert_eq!(unsafe { rl_diagram_automorphism_count(h, &mut n) }, RlStatus::Ok);
    assert_eq!(n, 8);
    unsafe { rl_diagram_free(h) };

    let junk = CString::new("{not json").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { rl_diagram_from_json(junk.as_ptr(), &mut h) }, RlStatus::Parse);
    assert!(h.is_null());
    assert!(!last_error().is_empty());
}

#[test]
fn tiling_handles() {
    let (num, den) = ([1i64, 1, 1], [3i64, 3, 2]);
    let target = [PI / 2.0, 2.0 * PI / 3.0, 2.0 * PI / 3.0];
    let mut t = ptr::null_mut();
    let s = unsafe { rl_tile_search(num.as_ptr(), den.as_ptr(), target.as_ptr(), 5, 1_000_000, &mut t) };
    assert_eq!(s, RlStatus::Ok);
    let mut n = 0;
    assert_eq!(unsafe { rl_tiling_tile_count(t, &mut n) }, RlStatus::Ok);
    assert_eq!(n, 5);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { rl_tiling_to_json(t, &mut json) }, RlStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
    unsafe { rl_string_free(json) };
    let parsed: reptile_lab::realize::TilingJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.tiles.len(), 5);
    unsafe { rl_tiling_free(t) };

    // too few tiles allowed, then too small a budget
    let mut t = ptr::null_mut();
    let s = unsafe { rl_tile_search(num.as_ptr(), den.as_ptr(), target.as_ptr(), 4, 1_000_000, &mut t) };
    assert_eq!(s, RlStatus::NotFound);
    let s = unsafe { rl_tile_search(num.as_ptr(), den.as_ptr(), target.as_ptr(), 5, 1, &mut t) };
    assert_eq!(s, RlStatus::Aborted);
    assert!(t.is_null());
    let bad_den = [3i64, 0, 2];
    let s = unsafe { rl_tile_search(num.as_ptr(), bad_den.as_ptr(), target.as_ptr(), 5, 10, &mut t) };
    assert_eq!(s, RlStatus::InvalidArgument);
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(rl_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

/// Compiles `tests/c_api.c` against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    // the test binary lives in <target>/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libreptile_lab_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("c_api");
    let status = std::process::Command::new("cc")
        .arg(manifest.join("tests/c_api.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler");
    assert!(status.success());
    let out = std::process::Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
