use num_traits::Signed;

use vr_core::arith::{int, RatPoly};
use vr_core::frobenius::{build_vq, build_vq_plus, FrobAlg};
use vr_core::grid::{analyze_grid, verify_grid};
use vr_core::numberfield::{sig_eta_plus, DEFAULT_SEED};
use vr_core::tqft::{
    genus_invariant, omega_plus_three_ways, residue_crosscheck, residue_crosscheck_so3,
    surface_signature, SurfaceSpec,
};
use vr_core::twobridge::s_star;
use vr_core::Params;

#[test]
fn verify_small_grid() {
    for rep in verify_grid(23, None) {
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn analysis_is_self_consistent() {
    for a in analyze_grid(3, 31, DEFAULT_SEED).unwrap() {
        let p = a.params;
        assert_eq!(a.sig_trace_form, a.sig_eta_plus, "{p}");
        assert_eq!(a.sig_trace_one, a.r1 as i64, "{p}");
        assert_eq!(a.knot_sig, 2 * a.sig_eta_plus, "{p}");
        assert_eq!(a.sig_eta_full, 0, "{p}");
        assert!(a.w_generates && a.disc_odd, "{p}");
        assert!(a.sig_eta_plus.unsigned_abs() as usize <= a.r1, "{p}");
        assert_eq!(a.factor_degrees.iter().sum::<usize>(), p.dim_plus());
        assert_eq!(a.chi_factors.expand(), a.chi);
    }
}

#[test]
fn mirror_flips_signature() {
    // s s* = 1 with s* even: K(r, s) = K(r, s*) is the mirror of K(r, r - s*)
    for p in Params::grid(3, 61) {
        let star = s_star(p);
        if star.is_odd() {
            continue;
        }
        let mirror = Params::new(p.r() as i64, (p.r() - star.inverse) as i64).unwrap();
        assert_eq!(sig_eta_plus(p), -sig_eta_plus(mirror), "{p}");
    }
}

#[test]
fn dump_round_trip() {
    for p in Params::grid(3, 15) {
        let v = build_vq(p);
        let plus = build_vq_plus(&v).unwrap();
        for alg in [&v, &plus] {
            assert_eq!(&FrobAlg::from_json(&alg.to_json()).unwrap(), alg);
        }
    }
}

#[test]
fn handle_powers() {
    for p in Params::grid(3, 23) {
        for g in 1..=5 {
            let spec = SurfaceSpec {
                genus: g,
                colors: vec![],
                so3: false,
            };
            assert_eq!(
                surface_signature(p, &spec).unwrap(),
                genus_invariant(p, g, false).unwrap(),
                "{p} g={g}"
            );
        }
        assert!(omega_plus_three_ways(p).passed(), "{p}");
    }
}

#[test]
fn verlinde_values_at_s1() {
    for r in (3..=23).step_by(2) {
        let p = Params::new(r, 1).unwrap();
        // sum_k csc^2(k pi / r) = (r^2 - 1) / 3
        assert_eq!(
            genus_invariant(p, 2, false).unwrap(),
            int(r * (r * r - 1) / 6)
        );
        for g in 0..=4 {
            let v = genus_invariant(p, g, false).unwrap();
            assert!(v.is_integer() && v.is_positive(), "r={r} g={g}: {v}");
        }
    }
}

#[test]
fn residues_on_random_polys() {
    let fs = [
        RatPoly::from_ints(&[3, -1, 4, 1, -5]),
        RatPoly::from_ints(&[0, 2, 0, -7]),
        RatPoly::x(),
    ];
    for p in Params::grid(3, 17) {
        for f in &fs {
            assert!(residue_crosscheck(p, f).unwrap(), "{p} {f}");
            assert!(residue_crosscheck_so3(p, f).unwrap(), "{p} {f}");
        }
    }
}
