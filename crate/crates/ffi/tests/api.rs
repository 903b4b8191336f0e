use std::ffi::{CStr, CString};
use std::ptr;

use ecckit_ffi::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> *mut EcckitGraph {
    let flat: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ecckit_graph_new(n, flat.as_ptr(), edges.len(), &mut g) }, EcckitStatus::Ok);
    g
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ecckit_string_free(s) };
    out
}

#[test]
fn cover_roundtrip_on_c5() {
    let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { ecckit_cover(g, EcckitMethod::Auto, usize::MAX, usize::MAX, &mut c) }, EcckitStatus::Ok);
    assert_eq!(unsafe { ecckit_cover_len(c) }, 5);
    assert!(unsafe { ecckit_cover_is_valid(c) });
    let mut seen = Vec::new();
    for i in 0..5 {
        let (mut vs, mut len) = (ptr::null(), 0);
        assert_eq!(unsafe { ecckit_cover_clique(c, i, &mut vs, &mut len) }, EcckitStatus::Ok);
        seen.push(unsafe { std::slice::from_raw_parts(vs, len) }.to_vec());
    }
    seen.sort();
    assert_eq!(seen, vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { ecckit_cover_json(c, &mut json) }, EcckitStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["route"], "NoDominatingEdge");
    unsafe {
        ecckit_cover_free(c);
        ecckit_graph_free(g);
    }
}

#[test]
fn parse_and_classify() {
    let text = CString::new("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ecckit_graph_parse(text.as_ptr(), true, &mut g) }, EcckitStatus::Ok);
    assert_eq!(unsafe { (ecckit_graph_order(g), ecckit_graph_edge_count(g)) }, (4, 3));
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { ecckit_classify_json(g, &mut json) }, EcckitStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["alpha"], 2);
    unsafe { ecckit_graph_free(g) };

    let bad = CString::new("0 1\n1 x\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ecckit_graph_parse(bad.as_ptr(), false, &mut g) }, EcckitStatus::Parse);
    let msg = unsafe { CStr::from_ptr(ecckit_last_error()) }.to_str().unwrap();
    assert!(msg.contains("line 2"), "{msg}");
    assert!(g.is_null());
}

#[test]
fn error_codes() {
    let mut out = false;
    assert_eq!(unsafe { ecckit_is_alpha_two(ptr::null(), &mut out) }, EcckitStatus::NullPointer);

    let g = graph(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6)]);
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { ecckit_cover(g, EcckitMethod::Auto, usize::MAX, usize::MAX, &mut c) },
        EcckitStatus::Unsupported
    );
    let mut ecc = 0;
    assert_eq!(unsafe { ecckit_exact_ecc(g, 0, 0, &mut ecc) }, EcckitStatus::Ok);
    assert_eq!(ecc, 7);
    assert_eq!(unsafe { ecckit_exact_ecc(g, 5, 0, &mut ecc) }, EcckitStatus::Capacity);
    unsafe { ecckit_graph_free(g) };

    let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
    assert_eq!(
        unsafe { ecckit_cover(g, EcckitMethod::Theorem1, usize::MAX, usize::MAX, &mut c) },
        EcckitStatus::Precondition
    );
    unsafe {
        ecckit_graph_free(g);
        ecckit_graph_free(ptr::null_mut());
        ecckit_cover_free(ptr::null_mut());
        ecckit_string_free(ptr::null_mut());
    }
    assert_eq!(unsafe { CStr::from_ptr(ecckit_version()) }.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
