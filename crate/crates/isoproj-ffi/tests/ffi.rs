use std::ffi::{CStr, CString};
use std::ptr;

use isoproj_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    iso_string_free(s);
    out
}

#[test]
fn pair_round_trip() {
    unsafe {
        let label = CString::new("E II").unwrap();
        let mut pair = ptr::null_mut();
        assert_eq!(iso_pair_new(label.as_ptr(), 6, 2, &mut pair), IsoStatus::Ok);
        let mut n = 0usize;
        assert_eq!(iso_pair_class_count(pair, &mut n), IsoStatus::Ok);
        assert_eq!(n, 2);
        let mut pts = 0usize;
        assert_eq!(iso_pair_admissible_count(pair, &mut pts), IsoStatus::Ok);
        assert_eq!(pts, 3);
        let mut herm = true;
        assert_eq!(iso_pair_is_hermitian(pair, &mut herm), IsoStatus::Ok);
        assert!(!herm);
        let (mut cp, mut codim) = (0u64, 0usize);
        assert_eq!(iso_pair_dimensions(pair, &mut cp, &mut codim), IsoStatus::Ok);
        assert_eq!((cp, codim), (19, 3));
        let mut s = ptr::null_mut();
        assert_eq!(iso_pair_representatives(pair, &mut s), IsoStatus::Ok);
        assert_eq!(take(s).lines().count(), 2);
        iso_pair_free(pair);
    }
}

#[test]
fn pair_errors() {
    unsafe {
        let mut pair = ptr::null_mut();
        let bad = CString::new("E XI").unwrap();
        assert_eq!(iso_pair_new(bad.as_ptr(), 6, 2, &mut pair), IsoStatus::UnknownLabel);
        assert!(pair.is_null());
        let msg = take(iso_last_error_message());
        assert!(msg.contains("E XI"));

        let a3 = CString::new("A III").unwrap();
        assert_eq!(iso_pair_new(a3.as_ptr(), 3, 1, &mut pair), IsoStatus::IllegalParameters);
        assert_eq!(iso_pair_new(ptr::null(), 3, 2, &mut pair), IsoStatus::NullPointer);
        assert_eq!(iso_pair_new(a3.as_ptr(), 3, 2, ptr::null_mut()), IsoStatus::NullPointer);
        let mut n = 0usize;
        assert_eq!(iso_pair_class_count(ptr::null(), &mut n), IsoStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(iso_pair_new(invalid.as_ptr().cast(), 3, 2, &mut pair), IsoStatus::InvalidString);
        iso_pair_free(ptr::null_mut());
    }
}

#[test]
fn fkm_handles() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(iso_fkm_new(2, 3, &mut f), IsoStatus::Ok);
        let mut n = 0usize;
        assert_eq!(iso_fkm_class_count(f, &mut n), IsoStatus::Ok);
        assert_eq!(n, 3);
        let (mut cp, mut m1, mut m2) = (0u64, 0i64, 0i64);
        assert_eq!(iso_fkm_multiplicities(f, &mut cp, &mut m1, &mut m2), IsoStatus::Ok);
        assert_eq!((cp, m1, m2), (5, 2, 3));
        let mut s = ptr::null_mut();
        assert_eq!(iso_fkm_representatives(f, &mut s), IsoStatus::Ok);
        assert_eq!(take(s).lines().count(), 3);
        iso_fkm_free(f);

        assert_eq!(iso_fkm_new_split(8, 2, 1, &mut f), IsoStatus::Ok);
        assert_eq!(iso_fkm_class_count(f, &mut n), IsoStatus::Ok);
        assert_eq!(n, 1);
        iso_fkm_free(f);

        let mut g = ptr::null_mut();
        assert_eq!(iso_fkm_new(4, 3, &mut g), IsoStatus::SplitShape);
        assert_eq!(iso_fkm_new(2, 2, &mut g), IsoStatus::OutOfScope);
        assert_eq!(iso_fkm_new(1, 1, &mut g), IsoStatus::NotFkm);
        assert!(g.is_null());
    }
}

#[test]
fn census_handles() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(iso_census_new(15, &mut c), IsoStatus::Ok);
        let mut len = 0usize;
        assert_eq!(iso_census_len(c, &mut len), IsoStatus::Ok);
        assert!(len > 0);
        let mut s = ptr::null_mut();
        assert_eq!(iso_census_export(c, IsoFormat::Json, &mut s), IsoStatus::Ok);
        let json = take(s);
        assert!(json.contains("open-gap"));
        assert_eq!(iso_census_export(c, IsoFormat::Csv, &mut s), IsoStatus::Ok);
        assert_eq!(take(s).lines().count(), len + 1);
        iso_census_free(c);

        assert_eq!(iso_census_new(0, &mut c), IsoStatus::IllegalParameters);
        let mut b = false;
        assert_eq!(iso_all_homogeneous(4, &mut b), IsoStatus::Ok);
        assert!(b);
        assert_eq!(iso_all_homogeneous(3, &mut b), IsoStatus::Ok);
        assert!(!b);
    }
}

#[test]
fn status_messages() {
    for s in [IsoStatus::Ok, IsoStatus::Panic, IsoStatus::OutOfScope] {
        let m = unsafe { CStr::from_ptr(iso_status_message(s)) };
        assert!(!m.to_bytes().is_empty());
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/isoproj.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    for line in src.lines().filter(|l| l.contains("extern \"C\" fn ")) {
        let name = line.split("fn ").nth(1).unwrap().split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct IsoPair IsoPair;"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = std::process::Command::new("cc").arg("--version").output() else { return };
    if !cc.status.success() {
        return;
    }
    let dir = std::env::temp_dir().join(format!("isoproj-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("use.c");
    std::fs::write(
        &file,
        "#include \"isoproj.h\"\nint main(void) { IsoPair *p = 0; size_t n = 0; return iso_pair_class_count(p, &n) == ISO_STATUS_NULL_POINTER ? 0 : 1; }\n",
    )
    .unwrap();
    let status = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I", concat!(env!("CARGO_MANIFEST_DIR"), "/include")])
        .arg(&file)
        .status()
        .unwrap();
    let _ = std::fs::remove_dir_all(&dir);
    assert!(status.success());
}
