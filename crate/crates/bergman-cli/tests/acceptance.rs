//! Acceptance suite: one test per criterion, each asserting exact
//! (tolerance-zero) equalities. Run with
//! `cargo test -p bergman-cli --test acceptance`.

use std::fs;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bergman_core::domains::{Domain, Ellipsoid, ReinhardtDomain};
use bergman_core::fischer::{bergman_project, FischerProjector};
use bergman_core::moments::{
    gram_project, holomorphic_monomials, reinhardt_project, verify_orthogonality_real,
};
use bergman_core::multiindex::{indices_up_to, MultiIndex};
use bergman_core::poly::{ComplexKey, ComplexPoly, RealKey, RealPoly};
use bergman_core::polyharmonic::{
    laplacian_rank, polyharmonic_basis, PolyharmonicProjector,
};
use bergman_core::scalar::{gint, grat, int, rat, GaussianRational, Rational};
use bergman_core::transport::{
    transport_project, validate_pair, SourceDomain, TransportedDomain,
};

fn z(n: usize, j: usize) -> ComplexPoly {
    ComplexPoly::var(n, j)
}

fn zb(n: usize, j: usize) -> ComplexPoly {
    ComplexPoly::conj_var(n, j)
}

fn x(d: usize, j: usize) -> RealPoly {
    RealPoly::var(d, j)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn random_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::new(random_rational(rng), random_rational(rng))
}

fn random_exponents(rng: &mut ChaCha8Rng, slots: usize, total: u32) -> Vec<u32> {
    let mut e = vec![0u32; slots];
    for _ in 0..total {
        e[rng.gen_range(0..slots)] += 1;
    }
    e
}

fn random_cpoly(rng: &mut ChaCha8Rng, n: usize, max_degree: u32, terms: usize) -> ComplexPoly {
    let mut p = ComplexPoly::zero(n);
    for _ in 0..terms {
        let degree = rng.gen_range(0..=max_degree);
        let cat = random_exponents(rng, 2 * n, degree);
        p.add_term(
            ComplexKey::new(
                MultiIndex::new(cat[..n].to_vec()),
                MultiIndex::new(cat[n..].to_vec()),
            ),
            random_gaussian(rng),
        );
    }
    p
}

fn random_holomorphic(rng: &mut ChaCha8Rng, n: usize, max_degree: u32, terms: usize) -> ComplexPoly {
    let mut p = ComplexPoly::zero(n);
    for _ in 0..terms {
        let degree = rng.gen_range(0..=max_degree);
        p.add_term(
            ComplexKey::new(
                MultiIndex::new(random_exponents(rng, n, degree)),
                MultiIndex::zero(n),
            ),
            random_gaussian(rng),
        );
    }
    p
}

fn random_rpoly(rng: &mut ChaCha8Rng, d: usize, max_degree: u32, terms: usize) -> RealPoly {
    let mut p = RealPoly::zero(d);
    for _ in 0..terms {
        let degree = rng.gen_range(0..=max_degree);
        p.add_term(
            RealKey(MultiIndex::new(random_exponents(rng, d, degree))),
            GaussianRational::new(random_rational(rng), Rational::from_integer(0.into())),
        );
    }
    p
}

/// All monomials z^α z̄^β with |α|+|β| ≤ max_degree.
fn mixed_monomials(n: usize, max_degree: u32) -> Vec<ComplexPoly> {
    indices_up_to(2 * n, max_degree)
        .into_iter()
        .map(|cat| {
            ComplexPoly::monomial(
                n,
                ComplexKey::new(
                    MultiIndex::new(cat.entries()[..n].to_vec()),
                    MultiIndex::new(cat.entries()[n..].to_vec()),
                ),
                gint(1),
            )
        })
        .collect()
}

/// The sheared polydisc `V = f(unit polydisc)` with `f = (z₁+z₂², z₂)`.
fn sheared_polydisc() -> TransportedDomain {
    let f = vec![&z(2, 0) + &z(2, 1).pow(2), z(2, 1)];
    let inv = vec![&z(2, 0) - &z(2, 1).pow(2), z(2, 1)];
    TransportedDomain::new(
        SourceDomain::Reinhardt(ReinhardtDomain::unit_polydisc(2)),
        validate_pair(f, inv).unwrap(),
    )
    .unwrap()
}

#[test]
fn criterion_1_cross_oracle_exactness() {
    // (complex dimension, Reinhardt form, Fischer-engine ellipsoid)
    let cases: Vec<(usize, ReinhardtDomain, Ellipsoid)> = vec![
        (1, ReinhardtDomain::unit_ball(1), Ellipsoid::unit_ball(2)),
        (2, ReinhardtDomain::unit_ball(2), Ellipsoid::unit_ball(4)),
        (1, ReinhardtDomain::complex_ellipsoid(vec![int(2)]).unwrap(), {
            ReinhardtDomain::complex_ellipsoid(vec![int(2)]).unwrap().to_ellipsoid().unwrap()
        }),
        (2, ReinhardtDomain::complex_ellipsoid(vec![int(1), int(2)]).unwrap(), {
            ReinhardtDomain::complex_ellipsoid(vec![int(1), int(2)])
                .unwrap()
                .to_ellipsoid()
                .unwrap()
        }),
    ];
    for (n, reinhardt, ellipsoid) in cases {
        let projector = FischerProjector::new(&ellipsoid, 4).unwrap();
        let gram_domain = Domain::Reinhardt(reinhardt.clone());
        let basis = holomorphic_monomials(n, 4);
        for monomial in mixed_monomials(n, 4) {
            let fischer = projector.project(&monomial).unwrap().projection;
            let direct = reinhardt_project(&reinhardt, &monomial).unwrap();
            let gram = gram_project(&gram_domain, &monomial, &basis).unwrap();
            assert_eq!(fischer, direct, "engines disagree on {monomial}");
            assert_eq!(fischer, gram, "gram oracle disagrees on {monomial}");
        }
        // the one-shot entry point (its own solve per degree) matches the
        // cached projector
        for monomial in mixed_monomials(n, 2) {
            assert_eq!(
                bergman_project(&ellipsoid, &monomial).unwrap().projection,
                projector.project(&monomial).unwrap().projection
            );
        }
    }
    // moment routes agree end to end: affine ball moments vs Reinhardt
    // closed form, via the gram oracle on low degrees
    for n in 1..=2usize {
        let affine = Domain::Ellipsoid(Ellipsoid::unit_ball(2 * n));
        let reinhardt = Domain::Reinhardt(ReinhardtDomain::unit_ball(n));
        let basis = holomorphic_monomials(n, 2);
        for monomial in mixed_monomials(n, 2) {
            assert_eq!(
                gram_project(&affine, &monomial, &basis).unwrap(),
                gram_project(&reinhardt, &monomial, &basis).unwrap()
            );
        }
    }
    println!("criterion 1 (cross-oracle exactness): pass");
}

#[test]
fn criterion_2_membership_point_checks() {
    let v = sheared_polydisc();
    assert!(v.contains(&[grat(91, 100), grat(1, 10)]).unwrap());
    assert!(v.contains(&[grat(171, 100), grat(9, 10)]).unwrap());
    assert!(!v.contains(&[grat(131, 100), grat(1, 2)]).unwrap());
    assert!(!v.contains(&[grat(-171, 100), grat(-9, 10)]).unwrap());

    // the pullbacks themselves are exactly the stated points
    let eval_inverse = |p: &[GaussianRational]| -> Vec<GaussianRational> {
        v.pair().inverse().iter().map(|g| g.eval(p)).collect()
    };
    assert_eq!(
        eval_inverse(&[grat(131, 100), grat(1, 2)]),
        vec![grat(53, 50), grat(1, 2)]
    );
    assert_eq!(
        eval_inverse(&[grat(-171, 100), grat(-9, 10)]),
        vec![grat(-63, 25), grat(-9, 10)]
    );
    println!("criterion 2 (membership point checks): pass");
}

#[test]
fn criterion_3_named_projection_values() {
    // B(z z̄) = 1/2 on the unit disc
    let disc = Ellipsoid::unit_ball(2);
    let h = bergman_project(&disc, &(&z(1, 0) * &zb(1, 0))).unwrap().projection;
    assert_eq!(h, ComplexPoly::constant(1, grat(1, 2)));

    // B(z₁ z̄₁) = 1/3 on the unit ball of C²
    let ball = Ellipsoid::unit_ball(4);
    let h = bergman_project(&ball, &(&z(2, 0) * &zb(2, 0))).unwrap().projection;
    assert_eq!(h, ComplexPoly::constant(2, grat(1, 3)));

    // first- and second-order projections on the interval (-1, 1)
    let interval = Ellipsoid::unit_ball(1);
    let h = PolyharmonicProjector::new(&interval, 1, 2)
        .unwrap()
        .project(&x(1, 0).pow(2))
        .unwrap()
        .projection;
    assert_eq!(h, RealPoly::constant(1, grat(1, 3)));
    let h = PolyharmonicProjector::new(&interval, 2, 4)
        .unwrap()
        .project(&x(1, 0).pow(4))
        .unwrap()
        .projection;
    let expected = &x(1, 0).pow(2).scale(&grat(6, 7)) - &RealPoly::constant(1, grat(3, 35));
    assert_eq!(h, expected);

    // transported value on the sheared polydisc
    let v = sheared_polydisc();
    let h = transport_project(&v, &(&z(2, 0) * &zb(2, 0))).unwrap();
    assert_eq!(h, ComplexPoly::constant(2, grat(5, 6)));
    println!("criterion 3 (named projection values): pass");
}

#[test]
fn criterion_4_fischer_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    // non-circular ellipsoids: unit ball stretched to semi-axis 2 along
    // the first real coordinate
    let stretched = |d: usize| -> Ellipsoid {
        let mut s = vec![vec![Rational::from_integer(0.into()); d]; d];
        for (i, row) in s.iter_mut().enumerate() {
            row[i] = if i == 0 { int(2) } else { int(1) };
        }
        Ellipsoid::from_affine(s, vec![Rational::from_integer(0.into()); d]).unwrap()
    };
    let cells: Vec<(usize, u32)> = (1..=2usize)
        .flat_map(|n| (1..=6u32).map(move |nn| (n, nn)))
        .chain((1..=3u32).map(|nn| (3usize, nn)))
        .collect();
    for (n, max_degree) in cells {
        let e = stretched(2 * n);
        let r = e.complex_defining().unwrap();
        // matrix nonsingularity is certified by a successful factorization
        let projector = FischerProjector::new(&e, max_degree).unwrap();
        let scaled =
            FischerProjector::with_defining(r.scale(&grat(3, 2)), max_degree).unwrap();
        let mut previous: Option<ComplexPoly> = None;
        for _ in 0..20 {
            let p = random_cpoly(&mut rng, n, max_degree, 6);
            let cert = projector.project(&p).unwrap();
            // holomorphic output, degree bound, exact identity, witness
            // divisibility
            assert!(cert.check(&r));
            // idempotence
            assert_eq!(
                projector.project(&cert.projection).unwrap().projection,
                cert.projection
            );
            // rescaling the defining polynomial changes nothing
            let cert_scaled = scaled.project(&p).unwrap();
            assert_eq!(cert_scaled.projection, cert.projection);
            assert_eq!(cert_scaled.solvent.scale(&grat(3, 2)), cert.solvent);
            // linearity against the previous sample
            if let Some(q) = previous.take() {
                let a = random_gaussian(&mut rng);
                let b = random_gaussian(&mut rng);
                let combo = &p.scale(&a) + &q.scale(&b);
                let lhs = projector.project(&combo).unwrap().projection;
                let rhs = &cert.projection.scale(&a)
                    + &projector.project(&q).unwrap().projection.scale(&b);
                assert_eq!(lhs, rhs);
            } else {
                previous = Some(p);
            }
        }
    }
    println!("criterion 4 (Fischer property suite): pass");
}

#[test]
fn criterion_5_polyharmonic_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let domains: Vec<Ellipsoid> = vec![
        Ellipsoid::unit_ball(1),
        Ellipsoid::from_affine(
            vec![vec![int(2), int(0)], vec![int(0), int(1)]],
            vec![rat(1, 3), int(0)],
        )
        .unwrap(),
        Ellipsoid::from_affine(
            vec![
                vec![int(2), int(0), int(0)],
                vec![int(0), int(1), int(0)],
                vec![int(0), int(0), int(1)],
            ],
            vec![int(0), int(0), int(0)],
        )
        .unwrap(),
    ];
    for e in &domains {
        let d = e.dim();
        for m in 1..=2u32 {
            for max_degree in 1..=6u32 {
                // surjectivity of the m-fold Laplacian on the degree cut
                let expected_rank = if max_degree >= 2 * m {
                    indices_up_to(d, max_degree - 2 * m).len()
                } else {
                    0
                };
                assert_eq!(laplacian_rank(d, m, max_degree), expected_rank);

                let projector = PolyharmonicProjector::new(e, m, max_degree).unwrap();
                let mut previous: Option<(RealPoly, RealPoly)> = None;
                for sample in 0..5 {
                    let p = random_rpoly(&mut rng, d, max_degree, 6);
                    let cert = projector.project(&p).unwrap();
                    assert!(cert.projection.laplacian_power(m).is_zero());
                    assert!(cert.check(e.defining_poly()));
                    // idempotence
                    assert_eq!(
                        projector.project(&cert.projection).unwrap().projection,
                        cert.projection
                    );
                    // linearity against the previous sample
                    if let Some((q, hq)) = previous.take() {
                        let a = GaussianRational::new(
                            random_rational(&mut rng),
                            Rational::from_integer(0.into()),
                        );
                        let combo = &p.scale(&a) + &q;
                        let lhs = projector.project(&combo).unwrap().projection;
                        let rhs = &cert.projection.scale(&a) + &hq;
                        assert_eq!(lhs, rhs);
                    } else {
                        previous = Some((p.clone(), cert.projection.clone()));
                    }
                    // exact orthogonality against the whole polyharmonic
                    // basis (two samples per cell keep the sweep fast)
                    if sample < 2 {
                        let basis = polyharmonic_basis(d, m, max_degree);
                        let report =
                            verify_orthogonality_real(e, &p, &cert.projection, &basis)
                                .unwrap();
                        assert!(report.verified);
                    }
                }
            }
        }
    }
    println!("criterion 5 (polyharmonic property suite): pass");
}

#[test]
fn criterion_6_transport_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    let v = sheared_polydisc();
    // unit Jacobian determinants, exactly
    assert_eq!(v.pair().jac_forward(), &ComplexPoly::one(2));
    assert_eq!(v.pair().jac_inverse(), &ComplexPoly::one(2));
    // holomorphic polynomials are fixed
    for _ in 0..10 {
        let h = random_holomorphic(&mut rng, 2, 4, 5);
        assert_eq!(transport_project(&v, &h).unwrap(), h);
    }
    // idempotence and holomorphic output on mixed inputs
    for _ in 0..5 {
        let p = random_cpoly(&mut rng, 2, 3, 5);
        let once = transport_project(&v, &p).unwrap();
        assert!(once.is_holomorphic());
        assert_eq!(transport_project(&v, &once).unwrap(), once);
    }
    println!("criterion 6 (transport suite): pass");
}

#[test]
fn criterion_7_cli_determinism_and_dims() {
    let dir = tempfile::tempdir().unwrap();
    let domain_path = dir.path().join("disc.json");
    let poly_path = dir.path().join("zzbar.json");
    fs::write(
        &domain_path,
        r#"{"type":"ellipsoid","affine":{"S":[["1","0"],["0","1"]],"c":["0","0"]}}"#,
    )
    .unwrap();
    fs::write(
        &poly_path,
        r#"{"vars":"zzbar","n":1,"terms":[{"alpha":[1],"beta":[1],"re":"1","im":"0"}]}"#,
    )
    .unwrap();

    let bin = env!("CARGO_BIN_EXE_bergman");
    let project_once = || {
        let out = Command::new(bin)
            .args(["project", "--domain"])
            .arg(&domain_path)
            .arg("--poly")
            .arg(&poly_path)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let first = project_once();
    let second = project_once();
    assert_eq!(first, second, "responses differ between identical runs");
    let text = String::from_utf8(first).unwrap();
    assert!(text.contains(r#""status":"ok""#));
    assert!(text.contains(r#""verified":true"#));

    // membership through the full CLI path
    let v_path = dir.path().join("sheared.json");
    let shear = r#"{"vars":"zzbar","n":2,"terms":[
        {"alpha":[1,0],"beta":[0,0],"re":"1","im":"0"},
        {"alpha":[0,2],"beta":[0,0],"re":"1","im":"0"}]}"#;
    let unshear = r#"{"vars":"zzbar","n":2,"terms":[
        {"alpha":[1,0],"beta":[0,0],"re":"1","im":"0"},
        {"alpha":[0,2],"beta":[0,0],"re":"-1","im":"0"}]}"#;
    let z2 = r#"{"vars":"zzbar","n":2,"terms":[{"alpha":[0,1],"beta":[0,0],"re":"1","im":"0"}]}"#;
    fs::write(
        &v_path,
        format!(
            r#"{{"type":"transported","source":{{"type":"polydisc","radii":["1","1"]}},"f":[{shear},{z2}],"F":[{unshear},{z2}]}}"#
        ),
    )
    .unwrap();
    let member = |point: &str| -> String {
        let out = Command::new(bin)
            .args(["member", "--domain"])
            .arg(&v_path)
            .args(["--point", point])
            .output()
            .unwrap();
        String::from_utf8(out.stdout).unwrap()
    };
    assert!(member("91/100,1/10").contains(r#""member":true"#));
    assert!(member("171/100,9/10").contains(r#""member":true"#));
    assert!(member("131/100,1/2").contains(r#""member":false"#));
    assert!(member("-171/100,-9/10").contains(r#""member":false"#));

    // dims against an independent Pascal-triangle oracle
    let mut pascal = vec![vec![1u64]];
    for i in 1..=20 {
        let prev = &pascal[i - 1];
        let mut row = vec![1u64];
        for j in 1..i {
            row.push(prev[j - 1] + prev[j]);
        }
        row.push(1);
        pascal.push(row);
    }
    let choose = |a: usize, b: usize| pascal[a][b];
    for n in 1..=4usize {
        for max_degree in 0..=8usize {
            let out = Command::new(bin)
                .args([
                    "dims",
                    "--n",
                    &n.to_string(),
                    "--N",
                    &max_degree.to_string(),
                ])
                .output()
                .unwrap();
            assert!(out.status.success());
            let parsed: serde_json::Value =
                serde_json::from_slice(&out.stdout).unwrap();
            let dims = &parsed["dims"];
            assert_eq!(dims["dimP"].as_u64().unwrap(), choose(2 * n + max_degree, 2 * n));
            assert_eq!(dims["dimHP"].as_u64().unwrap(), choose(n + max_degree, n));
            assert_eq!(
                dims["quotient"].as_u64().unwrap(),
                choose(2 * n + max_degree, 2 * n) - choose(n + max_degree, n)
            );
        }
    }
    println!("criterion 7 (CLI determinism and dims): pass");
}
