use std::ffi::{CStr, CString};
use std::ptr;

use tgs_ffi::*;

fn fixture(name: &str) -> *mut TgsSystem {
    let name = CString::new(name).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { tgs_system_fixture(name.as_ptr(), &mut out) },
        TgsStatus::Ok
    );
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    let p = tgs_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn z6_roundtrip_and_evaluate() {
    let sys = fixture("modular:6");
    unsafe {
        assert_eq!(tgs_system_state_count(sys), 6);
        assert_eq!(tgs_system_mediator_count(sys), 6);
        let mut v = 99;
        assert_eq!(tgs_evaluate(sys, 2, 3, 1, 1, 1, &mut v), TgsStatus::Ok);
        assert_eq!(v, 0);
        assert_eq!(
            tgs_evaluate(sys, 6, 0, 0, 0, 0, &mut v),
            TgsStatus::InvalidArgument
        );

        let mut text = ptr::null_mut();
        assert_eq!(tgs_system_serialize(sys, &mut text), TgsStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(tgs_system_parse(text, &mut back), TgsStatus::Ok);
        let mut v2 = 0;
        assert_eq!(tgs_evaluate(back, 5, 5, 5, 5, 5, &mut v2), TgsStatus::Ok);
        assert_eq!(v2, 5 * 5 * 5 * 5 * 5 % 6);
        tgs_string_free(text);
        tgs_system_free(back);
        tgs_system_free(sys);
    }
}

#[test]
fn axioms_and_ideals() {
    let z6 = fixture("modular:6");
    let mid = fixture("middle:2,1");
    unsafe {
        let mut holds = [false; 3];
        assert_eq!(tgs_check_axioms(z6, holds.as_mut_ptr()), TgsStatus::Ok);
        assert_eq!(holds, [true; 3]);
        assert_eq!(tgs_check_axioms(mid, holds.as_mut_ptr()), TgsStatus::Ok);
        assert!(!holds[0]);

        let evens = [1u8, 0, 1, 0, 1, 0];
        let mut b = false;
        assert_eq!(
            tgs_satisfies(z6, evens.as_ptr(), 6, TgsIdealKind::Chemical, &mut b),
            TgsStatus::Ok
        );
        assert!(b);
        assert_eq!(tgs_is_prime(z6, evens.as_ptr(), 6, &mut b), TgsStatus::Ok);
        assert!(!b);
        let full = [1u8; 6];
        assert_eq!(tgs_is_prime(z6, full.as_ptr(), 6, &mut b), TgsStatus::Ok);
        assert!(!b);

        let one = [0u8, 1, 0, 0, 0, 0];
        let mut closed = [0u8; 6];
        assert_eq!(
            tgs_generate_ideal(
                z6,
                one.as_ptr(),
                6,
                TgsIdealKind::Chemical,
                closed.as_mut_ptr()
            ),
            TgsStatus::Ok
        );
        assert_eq!(closed[0], 1);
        assert_eq!(closed[1], 1);
        assert_eq!(
            tgs_is_semiprime(z6, one.as_ptr(), 6, &mut b),
            TgsStatus::NotAnIdeal
        );
        assert!(!last_error().is_empty());

        let empty = [0u8; 6];
        assert_eq!(
            tgs_is_prime(z6, empty.as_ptr(), 6, &mut b),
            TgsStatus::EmptySubset
        );
        assert_eq!(
            tgs_is_prime(z6, evens.as_ptr(), 5, &mut b),
            TgsStatus::InvalidArgument
        );

        tgs_system_free(z6);
        tgs_system_free(mid);
    }
}

#[test]
fn pathways_and_reachability() {
    let sys = fixture("constant:4,1,2");
    unsafe {
        let src = [1u8, 0, 0, 0];
        let mut out = [0u8; 4];
        assert_eq!(
            tgs_reachable(sys, src.as_ptr(), 4, out.as_mut_ptr()),
            TgsStatus::Ok
        );
        assert_eq!(out, [1, 0, 1, 0]);
        let mut len = 99;
        assert_eq!(tgs_find_pathway(sys, 0, 2, 3, &mut len), TgsStatus::Ok);
        assert_eq!(len, 1);
        assert_eq!(tgs_find_pathway(sys, 0, 3, 3, &mut len), TgsStatus::Ok);
        assert_eq!(len, 0);
        tgs_system_free(sys);
    }
}

#[test]
fn homomorphisms_and_models() {
    let dom = fixture("constant:3,2,0");
    let cod = fixture("right:2,2");
    unsafe {
        let images = [0u32, 0, 0];
        let mut b = false;
        assert_eq!(
            tgs_is_homomorphism(dom, cod, images.as_ptr(), 3, &mut b),
            TgsStatus::Ok
        );
        assert!(b);
        let bad = [0u32, 1, 0];
        assert_eq!(
            tgs_is_homomorphism(dom, cod, bad.as_ptr(), 3, &mut b),
            TgsStatus::Ok
        );
        assert!(!b);
        let mut n = 0u64;
        assert_eq!(
            tgs_count_homomorphisms(dom, cod, 1_000_000, &mut n),
            TgsStatus::Ok
        );
        assert!(n >= 1);

        let z4 = fixture("modular:4");
        assert_eq!(
            tgs_is_homomorphism(dom, z4, images.as_ptr(), 3, &mut b),
            TgsStatus::MediatorMismatch
        );
        tgs_system_free(z4);

        assert_eq!(tgs_count_models(2, 1, 100_000_000, &mut n), TgsStatus::Ok);
        assert_eq!(n, 8);
        assert_eq!(
            tgs_count_models(3, 1, 10, &mut n),
            TgsStatus::BudgetExhausted
        );

        let mut s = ptr::null_mut();
        assert_eq!(tgs_sample_model(3, 1, 7, 10_000_000, &mut s), TgsStatus::Ok);
        assert!(!s.is_null());
        let mut holds = [false; 3];
        assert_eq!(tgs_check_axioms(s, holds.as_mut_ptr()), TgsStatus::Ok);
        assert_eq!(holds, [true; 3]);
        tgs_system_free(s);
        tgs_system_free(dom);
        tgs_system_free(cod);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut out = ptr::null_mut();
        let bad = CString::new("tgs v2\n").unwrap();
        assert_eq!(
            tgs_system_parse(bad.as_ptr(), &mut out),
            TgsStatus::ParseError
        );
        assert!(out.is_null());
        assert!(last_error().contains("line 1"));
        assert_eq!(
            tgs_system_parse(ptr::null(), &mut out),
            TgsStatus::NullPointer
        );
        let name = CString::new("nope").unwrap();
        assert_eq!(
            tgs_system_fixture(name.as_ptr(), &mut out),
            TgsStatus::InvalidArgument
        );
        assert_eq!(tgs_system_state_count(ptr::null()), 0);
        tgs_system_free(ptr::null_mut());
        let mut v = 0;
        assert_eq!(
            tgs_evaluate(ptr::null(), 0, 0, 0, 0, 0, &mut v),
            TgsStatus::NullPointer
        );
    }
}

#[test]
fn header_is_generated() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/tgs.h")).unwrap();
    for f in [
        "tgs_system_parse",
        "tgs_is_prime",
        "tgs_count_models",
        "TGS_STATUS_OK",
        "typedef struct TgsSystem TgsSystem",
    ] {
        assert!(h.contains(f), "{f} missing from header");
    }
}
