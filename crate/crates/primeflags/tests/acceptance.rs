//! End-to-end acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_DEVIATIONS` are allowed to fail; every other
//! criterion must pass for the target to succeed.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use primeflags::arith::{binomial, eulerian_polynomial, factorial, is_prime, is_sum_of_two_primes};
use primeflags::boundary::{boundary_table, fabry_lindelof};
use primeflags::compositions::{enumerate, Composition};
use primeflags::diagonals::{binomial_basis_text, diagonal_polynomial, walk_diagonal};
use primeflags::polyring::{discriminant_bivariate, PolyRing, PolynomialMatrix, RatPoly, RationalFunction};
use primeflags::quantum::{
    classify_semiclassical, companion_matrix_a, dynamical_matrix, fiber_power_check, quantum_char_poly,
    semiclassical_char_poly, simplicity_at_one, ZETA,
};
use primeflags::sequences::{
    asymptotic_ratio, dirichlet_coeff_identity_check, ell, ell_support, lcyr, SequenceKind, SequenceTable,
};
use primeflags::walkgraphs::{build_graph, GraphKind};

/// 7: the self-dual flag (2,1,2) has a repeated eigenvalue at q = (1,1).
/// 9: the printed (2,2) matrix places q1 one column left of the general rule.
/// 13: ρ(3, x) approaches 1 from above, so it decreases on the sample points.
const KNOWN_DEVIATIONS: &[u32] = &[7, 9, 13];

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn comp(s: &str) -> Composition {
    s.parse().unwrap()
}

fn all_compositions(n_max: usize) -> impl Iterator<Item = Composition> {
    (1..=n_max).flat_map(|n| (1..=n).flat_map(move |k| enumerate(n, k)))
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn rat(p: &[(i64, i64)]) -> RatPoly {
    RatPoly::from_fractions(p)
}

fn zq() -> PolyRing {
    PolyRing::new(&[ZETA, "q1", "q2"])
}

// 1
fn tables() -> Check {
    let mut cells = 0;
    for (kind, file) in [
        (SequenceKind::Lcyr, include_str!("data/lcyr.csv")),
        (SequenceKind::Tlcyr, include_str!("data/tlcyr.csv")),
        (SequenceKind::Ell, include_str!("data/ell.csv")),
    ] {
        let t = SequenceTable::compute(kind, 18);
        let mut lines = file.lines();
        let header: Vec<usize> = lines.next().unwrap().split(',').skip(1).map(|x| x.parse().unwrap()).collect();
        for line in lines {
            let mut fields = line.split(',');
            let parts: usize = fields.next().unwrap().parse().unwrap();
            for (n, v) in header.iter().zip(fields) {
                if v.is_empty() {
                    continue;
                }
                cells += 1;
                let got = t.get(*n, parts);
                ensure(got.to_string() == v, || format!("{kind}({n},{parts}) = {got}, table has {v}"))?;
            }
        }
    }
    ensure(cells == 459, || format!("{cells} cells compared"))
}

// 2
fn pascal_suite() -> Check {
    let l = |n: usize, k: usize| -> BigInt { BigInt::from(lcyr(n, k)) };
    let c = |k: usize, j: usize| -> BigInt { BigInt::from(binomial(k as u64, j as u64)) };
    let sign = |j: usize| if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    for nn in 2..=20 {
        for n in nn..=40 {
            ensure(l(n, nn) + l(n, nn + 1) == l(n + 1, nn + 1), || format!("pascal n={n} N={nn}"))?;
            let s: BigInt = (nn..=n).map(|k| l(k, nn)).sum();
            ensure(s == l(n + 1, nn + 1), || format!("partial sums n={n} N={nn}"))?;
            if nn >= 3 {
                ensure(l(n + 1, nn) - l(n, nn) == l(n, nn - 1), || format!("first difference n={n} N={nn}"))?;
            }
            for k in 0..=5 {
                if nn >= 2 + k {
                    let diff: BigInt = (0..=k).map(|j| sign(k - j) * c(k, j) * l(n + j, nn)).sum();
                    ensure(diff == l(n, nn - k), || format!("k-th difference n={n} N={nn} k={k}"))?;
                    let fwd: BigInt = (0..=k).map(|j| c(k, j) * l(n, nn - j)).sum();
                    ensure(fwd == l(n + k, nn), || format!("forward binomial n={n} N={nn} k={k}"))?;
                }
                let diag: BigInt = (0..=k).map(|j| c(k, j) * l(n, nn + j)).sum();
                ensure(diag == l(n + k, nn + k), || format!("diagonal n={n} N={nn} k={k}"))?;
                let alt: BigInt = (0..=k).map(|j| sign(j) * c(k, j) * l(n + k - j, nn + k)).sum();
                ensure(alt == l(n, nn), || format!("alternating n={n} N={nn} k={k}"))?;
            }
        }
    }
    Ok(())
}

const F111: &str = "zeta^6 + zeta^4*(-12*q1 - 12*q2) + zeta^2*(48*q1^2 - 336*q1*q2 + 48*q2^2) \
    - 64*q1^3 - 192*q1^2*q2 - 192*q1*q2^2 - 64*q2^3";
const F211: &str = "531441*q1^4 + 5563728*q1^3*q2*zeta + 78732*q1^3*zeta^3 - 12637312*q1^2*q2^3 \
    + 6060960*q1^2*q2^2*zeta^2 - 1005048*q1^2*q2*zeta^4 + 4374*q1^2*zeta^6 + 945152*q1*q2^4*zeta \
    - 191488*q1*q2^3*zeta^3 - 79744*q1*q2^2*zeta^5 + 16704*q1*q2*zeta^7 + 108*q1*zeta^9 + 4096*q2^6 \
    - 6144*q2^5*zeta^2 + 3840*q2^4*zeta^4 - 1280*q2^3*zeta^6 + 240*q2^2*zeta^8 - 24*q2*zeta^10 + zeta^12";

// 3
fn quantum_spectra() -> Check {
    let r = zq();
    let f221 = include_str!("data/char_poly_221.txt").replace('\n', " ");
    for (lam, text, deg) in [("1,1,1", F111.to_string(), 6), ("2,1,1", F211.to_string(), 12), ("2,2,1", f221, 30)] {
        let want = r.parse(&text).map_err(|e| format!("{lam}: {e}"))?;
        let got = quantum_char_poly(&comp(lam)).map_err(|e| e.to_string())?;
        ensure(got.degree_in(ZETA) == Some(deg), || format!("{lam}: degree {:?}", got.degree_in(ZETA)))?;
        ensure(got == want, || format!("{lam}: characteristic polynomial differs"))?;
    }
    Ok(())
}

// 4
fn discriminants() -> Check {
    let r = PolyRing::new(&["q1", "q2"]);
    let cases = [
        ("1,1,1", "2^36*3^18*q1^4*q2^4*(q1 - q2)^4*(q1 + q2)^3"),
        (
            "2,1,1",
            "-2^84*q1^16*q2^9*(3^18*q1^2 - 2^24*q2^3)^2*(3^12*q1^2 - 2^20*q2^3)^3*\
             (2^6*3^36*q1^6 + 3^18*41*163*277*1024783*q1^4*q2^3 + 2^29*17659*13255661*q1^2*q2^6 + 2^56*q2^9)^2",
        ),
    ];
    for (lam, text) in cases {
        let f = quantum_char_poly(&comp(lam)).map_err(|e| e.to_string())?;
        let d = discriminant_bivariate(&f, ZETA).map_err(|e| e.to_string())?;
        ensure(d == r.parse(text).unwrap(), || format!("{lam}: discriminant differs"))?;
    }
    Ok(())
}

// 5
fn semiclassical() -> Check {
    let r1 = PolyRing::new(&[ZETA, "q1"]);
    let r2 = PolyRing::new(&[ZETA, "q2"]);
    for (lam, i, ring, text) in [
        ("1,1,1", 1, &r1, "(zeta^2 - 4*q1)^3"),
        ("1,1,1", 2, &r2, "(zeta^2 - 4*q2)^3"),
        ("2,1,1", 1, &r1, "(27*q1 + zeta^3)^4"),
        ("2,1,1", 2, &r2, "(zeta^2 - 4*q2)^6"),
        ("2,2,1", 1, &r1, "zeta^10*(zeta^4 - 1024*q1)^5"),
        ("2,2,1", 2, &r2, "(zeta^3 + 27*q2)^10"),
    ] {
        let got = semiclassical_char_poly(&comp(lam), i).map_err(|e| e.to_string())?;
        ensure(got == ring.parse(text).unwrap(), || format!("{lam} i={i}: got {got}"))?;
    }
    for lam in all_compositions(6).filter(|c| c.len() >= 2) {
        for i in 1..lam.len() {
            let ok = fiber_power_check(&lam, i).map_err(|e| e.to_string())?;
            ensure(ok, || format!("{lam} i={i}: not a power of the fiber polynomial"))?;
        }
    }
    Ok(())
}

// 6
fn classification() -> Check {
    let mut count = 0;
    for lam in all_compositions(8).filter(|c| c.len() >= 2) {
        for i in 1..lam.len() {
            let c = classify_semiclassical(&lam, i).map_err(|e| format!("{lam} i={i}: {e}"))?;
            ensure(c.spectral.is_some() && c.consistent(), || format!("{lam} i={i}: {c:?}"))?;
            count += 1;
        }
    }
    ensure(count > 0, || "no cases".into())
}

// 7
fn simplicity() -> Check {
    let not_simple = ["1,1,1", "1,2,1", "3,1,1", "1,3,1", "1,1,3", "1,4,1", "2,2,2"];
    let mut mismatches = Vec::new();
    for lam in all_compositions(6).filter(|c| c.len() == 3) {
        let key = lam.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        let expect = !not_simple.contains(&key.as_str());
        let got = simplicity_at_one(&lam).map_err(|e| e.to_string())?;
        if got != expect {
            mismatches.push(format!("{lam}: simple={got}"));
        }
    }
    ensure(mismatches.is_empty(), || mismatches.join("; "))
}

fn q_rows(rows: &[&str]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            r.split('&')
                .map(|e| e.trim().replace("p3/p1", "q1*q2").replace("p2/p1", "q1").replace("p3/p2", "q2"))
                .collect()
        })
        .collect()
}

// 8
fn dynamical_operators() -> Check {
    let ring = PolyRing::new(&["z1", "z2", "z3", "q1", "q2"]);
    let printed: [[&str; 6]; 3] = [
        [
            "z1&0&1&0&0&0",
            "0&z1&0&1&1&0",
            "p2/p1&0&z2&0&1&0",
            "0&0&0&z2&0&1",
            "0&p2/p1&0&0&z3&0",
            "p3/p1&0&0&p2/p1&0&z3",
        ],
        [
            "z2&1&-1&0&0&0",
            "p3/p2&z3&0&0&-1&0",
            "-p2/p1&0&z1&1&0&0",
            "0&0&p3/p2&z3&0&-1",
            "0&-p2/p1&0&0&z1&1",
            "0&0&0&-p2/p1&p3/p2&z2",
        ],
        [
            "z3&-1&0&0&0&0",
            "-p3/p2&z2&0&-1&0&0",
            "0&0&z3&-1&-1&0",
            "0&0&-p3/p2&z1&0&0",
            "0&0&0&0&z2&-1",
            "-p3/p1&0&0&0&-p3/p2&z1",
        ],
    ];
    for (i, rows) in printed.iter().enumerate() {
        let want = PolynomialMatrix::parse_rows(&ring, &q_rows(rows)).map_err(|e| e.to_string())?;
        let got = dynamical_matrix(&comp("1,1,1"), i + 1).map_err(|e| e.to_string())?.matrix;
        ensure(got == want, || format!("X_{} differs", i + 1))?;
    }
    for lam in all_compositions(6) {
        let xs: Vec<PolynomialMatrix> =
            (1..=lam.len()).map(|i| dynamical_matrix(&lam, i).map(|d| d.matrix)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let ring = xs[0].ring().clone();
        let total = (1..=lam.n()).fold(ring.zero(), |acc, a| &acc + &ring.var(&format!("z{a}")));
        for r in 0..xs[0].dim() {
            for c in 0..xs[0].dim() {
                let e = xs.iter().fold(ring.zero(), |acc, x| &acc + x.get(r, c));
                let want = if r == c { total.clone() } else { ring.zero() };
                ensure(e == want, || format!("{lam}: sum of operators at ({r},{c}) is {e}"))?;
            }
        }
    }
    Ok(())
}

// 9
fn companion_matrices() -> Check {
    let printed: [(&str, Vec<Vec<&str>>); 3] = [
        ("1,1,1", vec![vec!["g1_1", "q1", "0"], vec!["-1", "g2_1", "q2"], vec!["0", "-1", "g3_1"]]),
        (
            "2,2",
            vec![
                vec!["g1_1", "g1_2", "-q1", "0"],
                vec!["-1", "0", "0", "0"],
                vec!["0", "-1", "g2_1", "g2_2"],
                vec!["0", "0", "-1", "0"],
            ],
        ),
        (
            "2,3,1",
            vec![
                vec!["g1_1", "g1_2", "0", "0", "q1", "0"],
                vec!["-1", "0", "0", "0", "0", "0"],
                vec!["0", "-1", "g2_1", "g2_2", "g2_3", "q2"],
                vec!["0", "0", "-1", "0", "0", "0"],
                vec!["0", "0", "0", "-1", "0", "0"],
                vec!["0", "0", "0", "0", "-1", "g3_1"],
            ],
        ),
    ];
    let mut failures = Vec::new();
    for (lam, rows) in printed.iter() {
        let a = companion_matrix_a(&comp(lam)).matrix;
        let want = PolynomialMatrix::parse_rows(a.ring(), rows).map_err(|e| e.to_string())?;
        if a != want {
            let cells: Vec<String> = (0..a.dim())
                .flat_map(|r| (0..a.dim()).map(move |c| (r, c)))
                .filter(|&(r, c)| a.get(r, c) != want.get(r, c))
                .map(|(r, c)| format!("({},{}) computed {} printed {}", r + 1, c + 1, a.get(r, c), want.get(r, c)))
                .collect();
            failures.push(format!("{lam}: {}", cells.join(", ")));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

// 10
fn generating_functions() -> Check {
    let r = PolyRing::new(&["z", "t"]);
    let printed = [
        (
            3,
            "-t*z*(t^2*z^5 + 2*t*z^4 + t*z^3 + t*z^2 + z^2 + z + 1)",
            "t^3*z^6 + t^2*z^5 + t^2*z^4 + t^2*z^3 + t*z - 1",
        ),
        (
            4,
            "-t^3*z^8 - t^3*z^6 - 2*t^2*z^7 - 3*t^2*z^5 - t^2*z^4 - t^2*z^3 - t*z^4 - t*z^3 - t*z^2 - t*z",
            "t^3*z^8 + t^3*z^6 + t^2*z^7 + 2*t^2*z^5 + t^2*z^4 + t^2*z^3 + t*z - 1",
        ),
    ];
    for (m, num, den) in printed {
        let g = build_graph(GraphKind::Gamma, m).map_err(|e| e.to_string())?;
        let f = g.bivariate_genfun().map_err(|e| e.to_string())?;
        ensure(f == RationalFunction::parse(&r, num, den).unwrap(), || format!("m={m}: got {f}"))?;
        let series = f.series("t", 8).map_err(|e| e.to_string())?;
        let walks = g.walk_polynomials(8);
        for n in 1..=8 {
            let w = walks[n - 1].to_sparse("z").embed(&r).map_err(|e| e.to_string())?;
            ensure(series[n] == w, || format!("m={m}: coefficient of t^{n}"))?;
        }
    }
    Ok(())
}

// 11
fn diagonals() -> Check {
    let lcyr_forms = [
        rat(&[(1, 1)]),
        rat(&[(0, 1), (1, 1)]),
        rat(&[(-2, 2), (1, 2), (1, 2)]),
        rat(&[(12, 6), (-4, 6), (3, 6), (1, 6)]),
        rat(&[(-96, 24), (42, 24), (-1, 24), (6, 24), (1, 24)]),
        rat(&[(720, 120), (-376, 120), (110, 120), (15, 120), (10, 120), (1, 120)]),
    ];
    let lcyr_binomial = [
        "C(n - 2, 0)",
        "C(n - 2, 1) + 2*C(n - 2, 0)",
        "C(n - 2, 2) + 3*C(n - 2, 1) + 2*C(n - 2, 0)",
        "C(n - 2, 3) + 4*C(n - 2, 2) + 5*C(n - 2, 1) + 4*C(n - 2, 0)",
        "C(n - 2, 4) + 5*C(n - 2, 3) + 9*C(n - 2, 2) + 9*C(n - 2, 1) + 2*C(n - 2, 0)",
        "C(n - 2, 5) + 6*C(n - 2, 4) + 14*C(n - 2, 3) + 18*C(n - 2, 2) + 11*C(n - 2, 1) + 6*C(n - 2, 0)",
    ];
    for k in 0..=5 {
        let e = diagonal_polynomial(SequenceKind::Lcyr, k).map_err(|e| e.to_string())?;
        ensure(e.polynomial == lcyr_forms[k], || format!("lcyr k={k}: {:?}", e.polynomial))?;
        let text = binomial_basis_text(&e.polynomial, -2);
        ensure(text == lcyr_binomial[k], || format!("lcyr k={k}: {text}"))?;
    }

    let tlcyr_forms = [
        rat(&[(1, 1)]),
        rat(&[(0, 1), (1, 1)]),
        rat(&[(2, 2), (-1, 2), (1, 2)]),
        rat(&[(-24, 6), (26, 6), (-3, 6), (1, 6)]),
    ];
    for (k, want) in tlcyr_forms.iter().enumerate() {
        let e = diagonal_polynomial(SequenceKind::Tlcyr, k).map_err(|e| e.to_string())?;
        ensure(&e.polynomial == want, || format!("tlcyr k={k}: {:?}", e.polynomial))?;
    }

    let ell_forms = [
        rat(&[(1, 1)]),
        rat(&[(0, 1), (1, 1)]),
        rat(&[(2, 2), (-3, 2), (1, 2)]),
        rat(&[(-2, 1), (16, 3), (-3, 2), (1, 6)]),
        rat(&[(9, 1), (-57, 4), (143, 24), (-3, 4), (1, 24)]),
        rat(&[(-32, 1), (713, 15), (-79, 4), (83, 24), (-1, 4), (1, 120)]),
        rat(&[(122, 1), (-1889, 12), (12541, 180), (-649, 48), (191, 144), (-1, 16), (1, 720)]),
        rat(&[(-466, 1), (38489, 70), (-4871, 20), (18821, 360), (-95, 16), (271, 720), (-1, 80), (1, 5040)]),
    ];
    let ell_series = [
        ("t", "t - 1"),
        ("t", "(t - 1)^2"),
        ("t*(t^3 - 4*t^2 + 3*t - 1)", "(t - 1)^3"),
        ("-t^5 + 6*t^4 - 5*t^3 + t", "(t - 1)^4"),
        ("t*(t^6 - 4*t^5 - 4*t^4 + 15*t^3 - 13*t^2 + 5*t - 1)", "(t - 1)^5"),
        ("-2*t^8 + 14*t^7 - 10*t^6 - 19*t^5 + 30*t^4 - 13*t^3 + t", "(t - 1)^6"),
        ("t*(t^9 - 4*t^8 - 21*t^7 + 53*t^6 - 21*t^5 - 42*t^4 + 54*t^3 - 27*t^2 + 7*t - 1)", "(t - 1)^7"),
        ("t*(-2*t^10 + 22*t^9 + 10*t^8 - 166*t^7 + 306*t^6 - 282*t^5 + 169*t^4 - 80*t^3 + 31*t^2 - 8*t + 1)", "(t - 1)^8"),
    ];
    let thresholds = [1, 1, 2, 2, 3, 3, 4, 4];
    let tr = PolyRing::new(&["t"]);
    for k in 0..=7 {
        let e = diagonal_polynomial(SequenceKind::Ell, k).map_err(|e| e.to_string())?;
        ensure(e.polynomial == ell_forms[k], || format!("ell k={k}: {:?}", e.polynomial))?;
        ensure(e.threshold == thresholds[k], || format!("ell k={k}: threshold {}", e.threshold))?;
        let got = walk_diagonal(SequenceKind::Ell, k, k + 1).map_err(|e| e.to_string())?.rational_form();
        let printed = RationalFunction::parse(&tr, ell_series[k].0, ell_series[k].1).unwrap();
        // The printed k = 0 series carries the wrong overall sign (ℓ(N,N) = 1 for all N).
        let want = if k == 0 { printed.neg() } else { printed };
        ensure(got == want, || format!("ell k={k}: series {got}"))?;
    }
    Ok(())
}

// 12
fn dirichlet() -> Check {
    let r = dirichlet_coeff_identity_check(2000);
    ensure(r.holds, || format!("first failure at n = {:?}", r.first_failure))
}

// 13
fn asymptotics() -> Check {
    let xs = [1_000u64, 10_000, 100_000, 1_000_000];
    let rho: Vec<f64> = xs.iter().map(|&x| asymptotic_ratio(3, x)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    println!("      rho(3, x) at 1e3..1e6: {rho:?}");
    ensure(rho.windows(2).all(|w| w[0] < w[1]), || format!("not increasing: {rho:?}"))?;
    ensure(rho[3] > 0.5 && rho[3] < 1.2, || format!("rho(3, 1e6) = {}", rho[3]))
}

// 14
fn goldbach_vanishing() -> Check {
    let support = ell_support(1000, 6);
    for n in 2..=1000 {
        ensure(!support[2][n] == !is_prime(n as u64), || format!("ell({n},2)"))?;
    }
    for n in 4..=500 {
        ensure(!support[4][n] == !is_sum_of_two_primes(n as u64), || format!("ell({n},4)"))?;
    }
    let wide = ell_support(200, 200);
    for nn in (1..=200).filter(|k| ![2, 4, 6].contains(k)) {
        for n in nn..=200 {
            ensure(wide[nn][n], || format!("ell({n},{nn}) vanishes"))?;
        }
    }
    for n in [11, 17, 23, 29, 35] {
        ensure(ell(n, 4).is_zero(), || format!("ell({n},4) = {}", ell(n, 4)))?;
    }
    for n in 2..=60 {
        for k in 1..=6.min(n) {
            ensure(support[k][n] == !ell(n, k).is_zero(), || format!("support disagrees at ({n},{k})"))?;
        }
    }
    Ok(())
}

// 15
fn fabry_lindelof_table() -> Check {
    let col_29 = [0.983001, 1.01382, 1.01390, 0.948462, 1.04988, 0.948462, 1.01390, 1.01382, 0.983001, 1.06435];
    let col_541 = [1.00502, 1.00498, 1.00498, 1.00502, 1.00746, 1.00502, 1.00498, 1.00498, 1.00502, 1.00753];
    let t = boundary_table(&[29, 541], 10, None).map_err(|e| e.to_string())?;
    for m in 0..10 {
        ensure((t[m][0] - col_29[m]).abs() < 1e-5, || format!("n=29 m={}: {}", m + 1, t[m][0]))?;
        ensure((t[m][1] - col_541[m]).abs() < 1e-5, || format!("n=541 m={}: {}", m + 1, t[m][1]))?;
    }
    for n in [29usize, 541] {
        let bits = n + 128;
        for m in 1..5u64 {
            let a = fabry_lindelof(n, m, 10, bits).map_err(|e| e.to_string())?;
            let b = fabry_lindelof(n, 10 - m, 10, bits).map_err(|e| e.to_string())?;
            ensure(a.to_decimal() == b.to_decimal(), || format!("n={n} m={m}: conjugate values differ"))?;
        }
    }
    Ok(())
}

// 16
fn eulerian() -> Check {
    let printed: [&[i64]; 10] = [
        &[1],
        &[0, 1],
        &[0, 1, 1],
        &[0, 1, 4, 1],
        &[0, 1, 11, 11, 1],
        &[0, 1, 26, 66, 26, 1],
        &[0, 1, 57, 302, 302, 57, 1],
        &[0, 1, 120, 1191, 2416, 1191, 120, 1],
        &[0, 1, 247, 4293, 15619, 15619, 4293, 247, 1],
        &[0, 1, 502, 14608, 88234, 156190, 88234, 14608, 502, 1],
    ];
    for (k, want) in printed.iter().enumerate() {
        let got = eulerian_polynomial(k).coefficients;
        let want: Vec<BigInt> = want.iter().map(|&c| big(c)).collect();
        ensure(got == want, || format!("k={k}: {got:?}"))?;
    }
    for k in 0..=15 {
        let v = eulerian_polynomial(k).eval(&BigInt::one());
        ensure(v == BigInt::from(factorial(k as u64)), || format!("k={k}: value at 1 is {v}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(u32, &str, fn() -> Check); 16] = [
        (1, "sequence tables", tables),
        (2, "pascal identities", pascal_suite),
        (3, "quantum characteristic polynomials", quantum_spectra),
        (4, "discriminants", discriminants),
        (5, "semiclassical limits", semiclassical),
        (6, "classification routes agree", classification),
        (7, "simplicity at q = 1", simplicity),
        (8, "dynamical operators", dynamical_operators),
        (9, "companion matrices", companion_matrices),
        (10, "walk generating functions", generating_functions),
        (11, "diagonal polynomials", diagonals),
        (12, "dirichlet coefficient identity", dirichlet),
        (13, "asymptotic ratio", asymptotics),
        (14, "vanishing and goldbach", goldbach_vanishing),
        (15, "fabry-lindelof probes", fabry_lindelof_table),
        (16, "eulerian polynomials", eulerian),
    ];
    let known: BTreeSet<u32> = KNOWN_DEVIATIONS.iter().copied().collect();
    let mut unexpected = Vec::new();
    for (id, name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {id:>2} {name} ({secs:.1}s)"),
            Err(msg) => {
                let tag = if known.contains(&id) { " [known deviation]" } else { "" };
                println!("FAIL {id:>2} {name} ({secs:.1}s){tag}: {msg}");
                if !known.contains(&id) {
                    unexpected.push(id);
                }
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
