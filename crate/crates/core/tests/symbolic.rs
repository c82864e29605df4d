use std::path::PathBuf;

use num_bigint::BigInt;

use horrocks::cohomology::{euler_characteristic, spectrum_h2};
use horrocks::symbolic::{
    verify_monad, Field, MapKind, MonadPresentation, Outcome, PrimeField, Rationals, VerifyConfig,
};
use horrocks::{Error, Spectrum};

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn fixture(name: &str) -> MonadPresentation {
    MonadPresentation::load(&path(name)).unwrap()
}

fn fixtures() -> Vec<(MonadPresentation, Spectrum)> {
    vec![
        (fixture("prop3_monad_1.json"), Spectrum::parse("1,2,1,1").unwrap()),
        (fixture("prop3_monad_2.json"), Spectrum::parse("1,2,2").unwrap()),
    ]
}

#[test]
fn section_matrix_sizes() {
    let p = fixture("prop3_monad_1.json");
    let q = Rationals;
    let m = p.section_matrix(&q, MapKind::Beta, -4).unwrap();
    assert_eq!((m.rows(), m.cols()), (1, 0));
    let m = p.section_matrix(&q, MapKind::Beta, -1).unwrap();
    assert_eq!((m.rows(), m.cols()), (24, 12));
    let m = p.section_matrix(&q, MapKind::Alpha, -20).unwrap();
    assert_eq!((m.rows(), m.cols()), (0, 0));
}

#[test]
fn known_h1_series() {
    let one = fixture("prop3_monad_1.json");
    let series: Vec<u64> = (-6..=-1).map(|l| one.h1_e(&Rationals, l).unwrap()).collect();
    assert_eq!(series, [0, 0, 1, 3, 7, 12]);
    let two = fixture("prop3_monad_2.json");
    let series: Vec<u64> = (-4..=-1).map(|l| two.h1_e(&Rationals, l).unwrap()).collect();
    assert_eq!(series, [0, 2, 6, 11]);
    assert_eq!(two.h0_e(&Rationals, 0).unwrap(), 0);
    assert_eq!(two.h0_e(&Rationals, -30).unwrap(), 0);
}

#[test]
fn chern_classes_of_fixtures() {
    for (p, s) in fixtures() {
        assert_eq!((p.rank(), p.c1(), p.c2()), (2, -1, s.c2()));
    }
}

#[test]
fn ranks_agree_across_fields() {
    let fields = [PrimeField::new(32003).unwrap(), PrimeField::new(65537).unwrap()];
    for (p, _) in fixtures() {
        for l in -8..=1 {
            let q = p.h1_e(&Rationals, l).unwrap();
            for f in &fields {
                assert_eq!(p.h1_e(f, l).unwrap(), q, "l = {l} mod {}", f.characteristic());
            }
        }
    }
}

#[test]
fn rao_module_vanishes_below_the_generators() {
    for (p, _) in fixtures() {
        let top = *p.a_degrees().iter().max().unwrap();
        for l in -top - 6..-top {
            assert_eq!(p.h1_e(&Rationals, l).unwrap(), 0, "l = {l}");
        }
    }
}

/// `h0 - h1 + h2 - h3` from section ranks against Riemann–Roch, with `h2`
/// and `h3` obtained by Serre duality.
#[test]
fn euler_characteristic_consistency() {
    let f = PrimeField::new(32003).unwrap();
    for (p, s) in fixtures() {
        for l in -8..=4 {
            let chi = p.h0_e(&f, l).unwrap() as i64 - p.h1_e(&f, l).unwrap() as i64 + p.h2_e(&f, l).unwrap() as i64
                - p.h3_e(&f, l).unwrap() as i64;
            assert_eq!(BigInt::from(chi), euler_characteristic(-1, s.c2(), l), "l = {l}");
        }
        // where the spectrum determines h2 and h0 = h3 = 0
        for l in -2..=-1 {
            let h1 = p.h1_e(&f, l).unwrap() as i64;
            let h2 = spectrum_h2(&s, l).unwrap() as i64;
            assert_eq!(BigInt::from(h2 - h1), euler_characteristic(-1, s.c2(), l), "l = {l}");
        }
    }
}

#[test]
fn verification_reports() {
    let config = VerifyConfig { primes: vec![32003, 65537], l_range: -7..=-1 };
    for (p, s) in fixtures() {
        let r = verify_monad(&p, Some(&s), &config).unwrap();
        assert_eq!(r.outcome, Outcome::Pass, "{r}");
    }
    let one = fixture("prop3_monad_1.json");
    let wrong = Spectrum::parse("1,2,2").unwrap();
    let r = verify_monad(&one, Some(&wrong), &config).unwrap();
    assert_eq!(r.outcome, Outcome::Fail);
    assert!(!r.spectrum_matches());
    let r = verify_monad(&one, None, &config).unwrap();
    assert_eq!(r.outcome, Outcome::Pass);
    assert!(verify_monad(&one, None, &VerifyConfig { primes: vec![32001], l_range: -1..=-1 }).is_err());
}

fn edit(name: &str, f: impl FnOnce(&mut serde_json::Value)) -> MonadPresentation {
    let text = std::fs::read_to_string(path(name)).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    f(&mut v);
    MonadPresentation::from_json(&v.to_string()).unwrap()
}

#[test]
fn sign_flip_breaks_composition() {
    let p = edit("prop3_monad_1.json", |v| {
        v["beta"][0][0][0]["c"] = "-1".into();
    });
    assert!(p.validate().is_empty());
    assert!(!p.compose_is_zero());
    assert!(matches!(p.h1_e(&Rationals, -1), Err(Error::Presentation(_))));
    let r = verify_monad(&p, None, &VerifyConfig::default()).unwrap();
    assert_eq!(r.outcome, Outcome::Fail);
}

#[test]
fn constant_entries_violate_minimality() {
    // a unit in a slot of required degree 0
    let p = edit("prop3_monad_1.json", |v| {
        v["bDegrees"] = serde_json::json!([3, 1, 1, -2, -2, -4]);
        v["beta"][1][1] = serde_json::json!([{"c": "5", "e": [0, 0, 0, 0]}]);
    });
    assert!(p.validate().iter().any(|m| m.contains("must vanish") || m.contains("homogeneous")));
    let r = verify_monad(&p, None, &VerifyConfig::default()).unwrap();
    assert_eq!(r.outcome, Outcome::Fail);
}

#[test]
fn wrong_degree_is_reported() {
    let p = edit("prop3_monad_2.json", |v| {
        v["beta"][0][0] = serde_json::json!([{"c": "1", "e": [0, 0, 0, 2]}]);
    });
    assert!(p.validate().iter().any(|m| m.contains("beta[0][0]")));
}

#[test]
fn degenerate_beta_is_detected() {
    // a zero alpha drops rank everywhere
    let p = edit("prop3_monad_2.json", |v| {
        v["alpha"] = serde_json::json!([[[], []], [[], []], [[], []], [[], []], [[], []], [[], []]]);
    });
    let f = PrimeField::new(32003).unwrap();
    let alpha = p.matrix_over(&f, MapKind::Alpha).unwrap();
    assert!(!horrocks::symbolic::degeneracy_locus_empty(&f, &alpha, 2).unwrap());
    let r = verify_monad(&p, None, &VerifyConfig::default()).unwrap();
    assert_eq!(r.outcome, Outcome::Fail);
}

#[test]
fn rational_coefficients_and_bad_primes() {
    // scaling a column of beta by 1/7 and the matching row of alpha by 7
    let p = edit("prop3_monad_1.json", |v| {
        v["beta"][0][0][0]["c"] = "1/7".into();
        v["beta"][1][0] = serde_json::json!([]);
        v["alpha"][0][0][0]["c"] = "-7".into();
        v["alpha"][0][1][0]["c"] = "-7".into();
    });
    assert!(p.compose_is_zero());
    let f7 = PrimeField::new(7).unwrap();
    assert!(p.matrix_over(&f7, MapKind::Beta).is_err());
    let r = verify_monad(&p, None, &VerifyConfig { primes: vec![7, 32003], l_range: -2..=-1 }).unwrap();
    assert_eq!(r.outcome, Outcome::Inconclusive, "{r}");
    let q = Rationals;
    assert_eq!(q.from_i64(3), num_rational::BigRational::from_integer(3.into()));
}
