use std::ffi::{CStr, CString};
use std::ptr;

use cherednik_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    let v = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
    ch_string_free(s);
    v
}

#[test]
fn jack_roundtrip() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(ch_context_new(2, 1, 2, &mut ctx), ChStatus::Ok);
        let mu = CString::new("1,0").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(ch_jack_json(ctx, mu.as_ptr(), 0, &mut out), ChStatus::Ok);
        let a = take(out);
        assert_eq!(ch_jack_json(ctx, mu.as_ptr(), 1, &mut out), ChStatus::Ok);
        let b = take(out);
        assert_eq!(a, b);
        assert_eq!(a["terms"].as_array().unwrap().len(), 1);
        ch_context_free(ctx);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(ch_context_new(3, 2, 2, &mut ctx), ChStatus::Domain);
        assert!(ctx.is_null());
        let msg = CStr::from_ptr(ch_last_error()).to_str().unwrap();
        assert!(msg.contains("domain"), "{msg}");
        assert_eq!(ch_context_new(2, 1, 2, ptr::null_mut()), ChStatus::NullPointer);

        assert_eq!(ch_context_new(2, 1, 2, &mut ctx), ChStatus::Ok);
        let mut out = ptr::null_mut();
        let bad = CString::new("1,x").unwrap();
        assert_eq!(ch_jack_json(ctx, bad.as_ptr(), 0, &mut out), ChStatus::Parse);
        let short = CString::new("1").unwrap();
        assert_eq!(ch_jack_json(ctx, short.as_ptr(), 0, &mut out), ChStatus::Domain);
        assert_eq!(ch_jack_json(ctx, ptr::null(), 0, &mut out), ChStatus::NullPointer);
        ch_context_free(ctx);

        let mut h = 0;
        assert_eq!(ch_coxeter_number(1, 1, 3, &mut h), ChStatus::Unsupported);
    }
}

#[test]
fn reports() {
    unsafe {
        let mut h = 0;
        assert_eq!(ch_coxeter_number(2, 1, 2, &mut h), ChStatus::Ok);
        assert_eq!(h, 4);
        let mut out = ptr::null_mut();
        assert_eq!(ch_gordon_json(2, 1, 2, &mut out), ChStatus::Ok);
        assert_eq!(take(out)["dim_count"], 25);
        assert_eq!(ch_catalan_json(2, 1, 2, 8, &mut out), ChStatus::Ok);
        assert_eq!(take(out)["value_at_one"], "6");
        assert_eq!(ch_exponents_json(2, 1, 2, 5, &mut out), ChStatus::Ok);
        assert_eq!(take(out)["exponents"], serde_json::json!([1, 3]));
        // The guard fails for G(2,2,2); the report still comes back.
        assert_eq!(ch_gordon_json(2, 2, 2, &mut out), ChStatus::CheckFailed);
        assert_eq!(take(out)["status"], "fail");
    }
}

#[test]
fn verify_and_special_point() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(ch_context_new(3, 1, 2, &mut ctx), ChStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(ch_verify_json(ctx, 3, &mut out), ChStatus::Ok);
        assert_eq!(take(out)["status"], "pass");
        ch_context_free(ctx);

        assert_eq!(ch_context_new_gordon(2, 1, 2, &mut ctx), ChStatus::Ok);
        let mu = CString::new("5,0").unwrap();
        assert_eq!(ch_jack_json(ctx, mu.as_ptr(), 0, &mut out), ChStatus::Ok);
        let v = take(out);
        assert_eq!(v["weight"]["z"][0], "7/2");
        ch_context_free(ctx);
    }
}
