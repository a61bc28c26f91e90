//! Named identity checks grouped into suites, with a machine-readable report.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::embeddings::{
    canonical_elements, diagram_check, embed, embed_blade, extract, ell, theta, tilde_generator,
    twisted_action_check, ComplexMultivector13, EmbeddingKind,
};
use crate::groups::{
    adjoint_matrix, classify, in_clifford_group, in_twisted_clifford_group,
    kernel_of_adjoint_on_pin, KernelTag,
};
use crate::linalg::RationalMatrix;
use crate::multivector::Multivector;
use crate::parser::{parse_and_evaluate, Mode};
use crate::sampling::Sampler;
use crate::signature::{Blade, Signature};
use crate::spinors::{
    dirac_idempotent, e4_reduction_check, idempotent_exponent, in_5d_aut, in_aut, is_primitive,
    peirce_check, radon_hurwitz, Antimorphism, KMatrix, KScalar, SpinorSpace,
};
use crate::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("plain data");
        v["exit_code"] = self.exit_code().into();
        v
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            writeln!(f, "{tag}  {:width$}  {}: {}", c.id, c.anchor, c.detail)?;
            if let Some(w) = &c.warning {
                writeln!(f, "      {:width$}  warning: {w}", "")?;
            }
        }
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        write!(
            f,
            "{}: {} checks, {} failed",
            self.suite,
            self.checks.len(),
            failed
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    All,
    Core,
    Groups,
    Embeddings,
    Spinors,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Core => "core",
            Suite::Groups => "groups",
            Suite::Embeddings => "embeddings",
            Suite::Spinors => "spinors",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "core" => Ok(Suite::Core),
            "groups" => Ok(Suite::Groups),
            "embeddings" => Ok(Suite::Embeddings),
            "spinors" => Ok(Suite::Spinors),
            _ => Err(format!("unknown suite `{s}`")),
        }
    }
}

struct Collector {
    checks: Vec<Check>,
}

impl Collector {
    fn check(&mut self, id: &str, anchor: &str, run: impl FnOnce() -> (bool, String)) {
        self.check_warn(id, anchor, || {
            let (ok, detail) = run();
            (ok, detail, None)
        });
    }

    fn check_warn(
        &mut self,
        id: &str,
        anchor: &str,
        run: impl FnOnce() -> (bool, String, Option<String>),
    ) {
        let (ok, detail, warning) = run();
        self.checks.push(Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
            warning,
        });
    }
}

fn verdict(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> (bool, String) {
    (ok, if ok { pass.into() } else { fail.into() })
}

/// Runs a suite; checks are sorted by id.
pub fn run(suite: Suite, seed: u64) -> Report {
    let mut c = Collector { checks: Vec::new() };
    if matches!(suite, Suite::All | Suite::Core) {
        core_suite(&mut c, seed);
    }
    if matches!(suite, Suite::All | Suite::Groups) {
        groups_suite(&mut c, seed);
    }
    if matches!(suite, Suite::All | Suite::Embeddings) {
        embeddings_suite(&mut c, seed);
    }
    if matches!(suite, Suite::All | Suite::Spinors) {
        spinors_suite(&mut c, seed);
    }
    c.checks.sort_by(|a, b| a.id.cmp(&b.id));
    Report {
        suite: suite.name().to_string(),
        seed,
        checks: c.checks,
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn core_suite(c: &mut Collector, seed: u64) {
    let sig = Signature::cl23();
    c.check("core.01.dimension", "dim Cl(2,3) = 32, grades C(5,k)", || {
        let dims: Vec<usize> = (0..=5).map(|k| sig.blades_of_grade(k).len()).collect();
        let expected: Vec<usize> = (0..=5).map(|k| binomial(5, k)).collect();
        verdict(
            sig.blades().len() == 32 && dims == expected,
            format!("grade dimensions {dims:?}"),
            format!("grade dimensions {dims:?}, expected {expected:?}"),
        )
    });
    c.check("core.02.center", "center = span{1, i}, i^2 = -1", || {
        let central: Vec<Blade> = sig
            .blades()
            .into_iter()
            .filter(|b| Multivector::blade(sig, *b).is_central())
            .collect();
        let i = Multivector::pseudoscalar(sig);
        let ok = central == [Blade::SCALAR, Blade(0b11111)]
            && (&i * &i) == Multivector::from_int(sig, -1);
        verdict(ok, "central blades {1, e0*e1*e2*e3*e4}", format!("central blades {central:?}"))
    });
    c.check("core.03.involutions", "grade involution, reversion, conjugation laws", || {
        let mut s = Sampler::new(seed);
        let ok = (0..30).all(|_| {
            let a = s.multivector(sig, 0.4);
            let b = s.multivector(sig, 0.4);
            let ab = &a * &b;
            ab.grade_involution() == &a.grade_involution() * &b.grade_involution()
                && ab.reversion() == &b.reversion() * &a.reversion()
                && ab.clifford_conjugation()
                    == &b.clifford_conjugation() * &a.clifford_conjugation()
                && a.grade_involution().grade_involution() == a
                && a.reversion().reversion() == a
        });
        verdict(ok, "30 sampled pairs", "a law failed on a sampled pair")
    });
    c.check("core.04.vector-norm", "N(v) = -Phi(v) on vectors", || {
        let mut s = Sampler::new(seed ^ 1);
        let ok = (0..30).all(|_| {
            let v = s.vector(sig);
            v.norm() == -(&v * &v)
        });
        verdict(ok, "30 sampled vectors", "norm mismatch on a sampled vector")
    });
    c.check("core.05.render-round-trip", "parse(render(m)) = m", || {
        let mut s = Sampler::new(seed ^ 2);
        let ok = (0..30).all(|_| {
            let m = s.multivector(sig, 0.3);
            parse_and_evaluate(&m.to_string(), Mode::Cl23).as_ref() == Ok(&m)
        });
        verdict(ok, "30 sampled elements", "round trip changed an element")
    });
}

fn groups_suite(c: &mut Collector, seed: u64) {
    let cl23 = Signature::cl23();
    let cl13 = Signature::cl13();
    let cl32 = Signature::from_pq(3, 2).expect("valid signature");
    let kernels = [
        ("groups.01.kernel-23", "ker Ad on Pin(2,3) = Z4", cl23, KernelTag::Z4),
        ("groups.02.kernel-32", "ker Ad on Pin(3,2) = Z2xZ2", cl32, KernelTag::Z2xZ2),
        ("groups.03.kernel-13", "ker Ad on Pin(1,3) = Z2", cl13, KernelTag::Z2),
    ];
    for (id, anchor, sig, tag) in kernels {
        c.check(id, anchor, || {
            let k = kernel_of_adjoint_on_pin(sig);
            verdict(
                k.tag == tag && k.verified,
                format!("{} ({} elements act trivially)", k.tag, k.elements.len()),
                format!("got {} verified={}", k.tag, k.verified),
            )
        });
    }
    c.check("groups.04.ad-homomorphism", "Ad(xy) = Ad(x)Ad(y)", || {
        let mut s = Sampler::new(seed ^ 3);
        let ok = (0..20).all(|_| {
            let x = s.versor_any(cl23);
            let y = s.versor_any(cl23);
            let lhs = adjoint_matrix(&(&x * &y));
            let rhs = adjoint_matrix(&x).and_then(|a| adjoint_matrix(&y).and_then(|b| a.compose(&b)));
            matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
        });
        verdict(ok, "20 sampled versor pairs", "homomorphism failed")
    });
    c.check("groups.05.ad-into-so23", "Ad(Pin(2,3)) lies in SO(2,3)", || {
        let mut s = Sampler::new(seed ^ 4);
        let ok = (0..30).all(|_| {
            let x = s.pin_element_any(cl23);
            adjoint_matrix(&x).is_ok_and(|m| m.determinant() == 1)
        });
        verdict(ok, "M^T g M = g and det = +1 on 30 samples", "a sample left SO(2,3)")
    });
    c.check("groups.06.twisted-inside", "twisted group inside Clifford-Lipschitz group", || {
        let mut s = Sampler::new(seed ^ 5);
        let contained = (0..30).all(|_| {
            let x = s.versor_any(cl23);
            !in_twisted_clifford_group(&x) || in_clifford_group(&x)
        });
        let sep = Multivector::one(cl23) + Multivector::pseudoscalar(cl23);
        let strict = in_clifford_group(&sep) && !in_twisted_clifford_group(&sep);
        let equal13 = (0..30).all(|_| {
            let x = s.multivector(cl13, 0.3);
            in_twisted_clifford_group(&x) == in_clifford_group(&x)
        }) && (0..30).all(|_| {
            let x = s.versor_any(cl13);
            in_twisted_clifford_group(&x) && in_clifford_group(&x)
        });
        verdict(
            contained && strict && equal13,
            "contained on samples; 1 + i separates them in Cl(2,3); equal on Cl(1,3) samples",
            format!("contained={contained} strict={strict} equal13={equal13}"),
        )
    });
    c.check("groups.07.pin-generation", "products of unit vectors lie in Pin", || {
        let mut s = Sampler::new(seed ^ 6);
        let ok = [cl23, cl13].iter().all(|&sig| {
            (0..20).all(|_| classify(&s.pin_element_any(sig)).flags.in_pin)
        });
        verdict(ok, "20 samples each in Cl(2,3) and Cl(1,3)", "a sample was not in Pin")
    });
}

fn embeddings_suite(c: &mut Collector, seed: u64) {
    let cl13 = Signature::cl13();
    let cl23 = Signature::cl23();
    let kinds = [EmbeddingKind::Trivial, EmbeddingKind::Twisted];
    c.check("embeddings.01.round-trip", "extract(embed(x)) = x on blades times {1, I}", || {
        let one = Rational::from_integer(1.into());
        let zero = Rational::from_integer(0.into());
        let mut count = 0;
        let ok = kinds.iter().all(|&k| {
            cl13.blades().into_iter().all(|b| {
                [(one.clone(), zero.clone()), (zero.clone(), one.clone())]
                    .into_iter()
                    .all(|(re, im)| {
                        count += 1;
                        let x = ComplexMultivector13::blade(b, num_complex::Complex::new(re, im));
                        extract(&embed(&x, k), k).as_ref() == Ok(&x)
                    })
            })
        });
        verdict(ok, format!("{count} cases"), "a round trip failed")
    });
    c.check("embeddings.02.clifford-relations", "image generators anticommute as 2 eta", || {
        let ok = kinds.iter().all(|&k| {
            (0..4).all(|mu| {
                (0..4).all(|nu| {
                    let a = embed_blade(Blade::generator(mu), k);
                    let b = embed_blade(Blade::generator(nu), k);
                    let eta = if mu == nu { cl13.square(mu) as i64 } else { 0 };
                    &(&a * &b) + &(&b * &a) == Multivector::from_int(cl23, 2 * eta)
                })
            })
        });
        verdict(ok, "both embeddings, 16 pairs", "anticommutator mismatch")
    });
    c.check("embeddings.03.tilde-products", "e~_mu e~_nu = e_mu e_nu", || {
        let ok = (0..4).all(|mu| {
            (0..4).all(|nu| {
                &tilde_generator(mu) * &tilde_generator(nu)
                    == Multivector::generator(cl23, mu) * Multivector::generator(cl23, nu)
            })
        });
        verdict(ok, "16 pairs", "product mismatch")
    });
    c.check("embeddings.04.theta-values", "theta(P) = e1e2e3e4, theta(T) = -e0e4", || {
        let ce = canonical_elements();
        let ok = theta(&ce.parity).as_ref() == Ok(&ce.parity5)
            && theta(&ce.time_reversal).as_ref() == Ok(&ce.time_reversal5)
            && ce.parity5.to_string() == "e1*e2*e3*e4"
            && ce.time_reversal5.to_string() == "-e0*e4";
        verdict(ok, "both values exact", "value mismatch")
    });
    c.check("embeddings.05.diagram", "Ad(theta(x)) = ell(Ad(x))", || {
        let gens: Vec<Multivector> = (0..4).map(|mu| Multivector::generator(cl13, mu)).collect();
        let mut words = vec![Multivector::one(cl13)];
        let mut layer = words.clone();
        for _ in 0..4 {
            layer = layer
                .iter()
                .flat_map(|w| gens.iter().map(move |g| w * g))
                .collect();
            words.extend(layer.iter().cloned());
        }
        let exhaustive = words.iter().all(|w| diagram_check(w) == Ok(true));
        let mut s = Sampler::new(seed ^ 7);
        let sampled = (0..200).all(|_| diagram_check(&s.pin_element_any(cl13)) == Ok(true));
        verdict(
            exhaustive && sampled,
            format!("{} generator words and 200 samples", words.len()),
            format!("exhaustive={exhaustive} sampled={sampled}"),
        )
    });
    c.check("embeddings.06.twisted-action", "Ad_x(v~) = +-(Ad_x v)~ by parity", || {
        let gens: Vec<Multivector> = (0..4).map(|mu| Multivector::generator(cl13, mu)).collect();
        let exhaustive = gens
            .iter()
            .all(|x| gens.iter().all(|v| twisted_action_check(x, v) == Ok(true)));
        let mut s = Sampler::new(seed ^ 8);
        let sampled = (0..100).all(|_| {
            let x = s.pin_element_any(cl13);
            let v = s.vector(cl13);
            twisted_action_check(&x, &v) == Ok(true)
        });
        verdict(
            exhaustive && sampled,
            "16 generator pairs and 100 samples",
            format!("exhaustive={exhaustive} sampled={sampled}"),
        )
    });
    c.check("embeddings.07.ell", "ell(L) = diag(L, det L) in SO(2,3)", || {
        let p = ell(&RationalMatrix::from_diag_i64(&[1, -1, -1, -1]));
        let t = ell(&RationalMatrix::from_diag_i64(&[-1, 1, 1, 1]));
        let ok = p.is_ok_and(|m| m.matrix() == &RationalMatrix::from_diag_i64(&[1, -1, -1, -1, -1]))
            && t.is_ok_and(|m| m.matrix() == &RationalMatrix::from_diag_i64(&[-1, 1, 1, 1, -1]));
        verdict(ok, "parity and time reversal images", "image mismatch")
    });
}

fn diag4(entries: [i64; 4]) -> KMatrix {
    KMatrix::diagonal(&entries.map(|a| KScalar::from_ints(a, 0)))
}

fn spinors_suite(c: &mut Collector, seed: u64) {
    let cl23 = Signature::cl23();
    let space = SpinorSpace::dirac();
    let f = dirac_idempotent();
    c.check("spinors.01.idempotent", "f = 1/2(1+e1e2e3) 1/2(1-e0e3e4) is primitive", || {
        verdict(is_primitive(&f), "f^2 = f, dim Cl f = 8", "not primitive")
    });
    c.check("spinors.02.e4-reduction", "e4 f = -i e0 f", || {
        verdict(
            e4_reduction_check(&f) && space.ideal_split_check(),
            "holds; Cl(2,3)f = Cl(1,3)f + i Cl(1,3)f",
            "identity failed",
        )
    });
    c.check("spinors.03.k-basis", "Dirac K-basis {f, e1f, e0f, e0e1f}", || {
        let e = |idx: &[usize]| Multivector::blade(cl23, Blade::from_indices(idx).unwrap());
        let expected = [f.clone(), &e(&[1]) * &f, &e(&[0]) * &f, &e(&[0, 1]) * &f];
        verdict(space.k_basis() == expected, "bit-exact", "basis differs")
    });
    c.check("spinors.04.gram", "Dirac Gram matrix diag(f, f, -f, -f)", || {
        let h = space.gram_matrix(Antimorphism::Conjugation);
        verdict(h == diag4([1, 1, -1, -1]), "bit-exact", format!("got\n{h}"))
    });
    c.check("spinors.05.find-s", "s = e0e1", || {
        let s = space.s(Antimorphism::Reversion);
        verdict(
            s.to_string() == "e0*e1" && space.s(Antimorphism::Conjugation).is_one(),
            "reversion s = e0*e1, conjugation s = 1",
            format!("reversion s = {s}"),
        )
    });
    c.check("spinors.06.scalar-conjugation", "conj(i) = -i, (if)* = if", || {
        let z = KScalar::new(Rational::new(2.into(), 3.into()), Rational::new((-5).into(), 7.into()));
        let ok = space.scalar_conjugation(&z, Antimorphism::Conjugation) == z.conj()
            && space.scalar_conjugation(&z, Antimorphism::Reversion) == z;
        verdict(ok, "(a,b) -> (a,-b) and identity", "conjugation mismatch")
    });
    c.check("spinors.07.gamma0", "rep(e~0) = diag(1, 1, -1, -1)", || {
        let g = space.gamma_matrices();
        let anti = (0..4).all(|mu| {
            (0..4).all(|nu| {
                let eta = if mu == nu { Signature::cl13().square(mu) as i64 } else { 0 };
                &(&g[mu] * &g[nu]) + &(&g[nu] * &g[mu])
                    == KMatrix::identity(4).scale(&KScalar::from_ints(2 * eta, 0))
            })
        });
        verdict(
            g[0] == diag4([1, 1, -1, -1]) && anti,
            "diagonal and all anticommutators 2 eta Id",
            "representation mismatch",
        )
    });
    c.check("spinors.08.matrix-adjoint", "A^dagger = gamma0 conj(A) gamma0", || {
        let blades = cl23
            .blades()
            .into_iter()
            .all(|b| space.matrix_adjoint_check(&Multivector::blade(cl23, b)));
        let mut s = Sampler::new(seed ^ 9);
        let sampled = (0..100).all(|_| space.matrix_adjoint_check(&s.multivector(cl23, 0.5)));
        verdict(
            blades && sampled,
            "32 blades and 100 samples",
            format!("blades={blades} sampled={sampled}"),
        )
    });
    c.check("spinors.09.rep-homomorphism", "rep(AB) = rep(A) rep(B)", || {
        let mut s = Sampler::new(seed ^ 10);
        let ok = (0..100).all(|_| {
            let a = s.multivector(cl23, 0.5);
            let b = s.multivector(cl23, 0.5);
            space.matrix_rep(&(&a * &b)) == &space.matrix_rep(&a) * &space.matrix_rep(&b)
        }) && space.matrix_rep(&Multivector::one(cl23)).is_identity();
        verdict(ok, "100 sampled pairs", "homomorphism failed")
    });
    c.check("spinors.10.peirce", "E_ij E_lk = delta_jl E_ik, sum f_i = 1", || {
        match space.complete_idempotent_set() {
            Ok(set) => {
                let report = peirce_check(&set);
                let ok = set.len() == 4
                    && set.sums_to_one()
                    && set.orthogonal()
                    && set.matrix_unit_relations()
                    && report.holds();
                verdict(
                    ok,
                    format!("4 idempotents; Peirce blocks total dimension {}", report.total_dimension),
                    "a relation failed",
                )
            }
            Err(e) => (false, e.to_string()),
        }
    });
    c.check_warn("spinors.11.radon-hurwitz", "r_j table and exponent q - r_{q-p}", || {
        let row: Vec<i64> = (0..8).map(radon_hurwitz).collect();
        let exponent = idempotent_exponent(cl23);
        let set_size = space.complete_idempotent_set().map(|s| s.len()).unwrap_or(0);
        let ok = row == [0, 1, 2, 2, 3, 3, 3, 3]
            && radon_hurwitz(9) == 5
            && exponent == 2
            && set_size == 1usize << exponent;
        let (ok, detail) = verdict(
            ok,
            format!("r = {row:?}, r_9 = 5, exponent 2, complete set of {set_size}"),
            format!("r = {row:?}, exponent {exponent}, set {set_size}"),
        );
        let warning = (set_size as i64 != exponent).then(|| {
            format!(
                "q - r_(q-p) = {exponent} counts idempotent factors; the complete set has 2^{exponent} = {set_size} members"
            )
        });
        (ok, detail, warning)
    });
    c.check("spinors.12.automorphisms", "Aut contains the central unit circle", || {
        let circle = Multivector::scalar(cl23, Rational::new(3.into(), 5.into()))
            + Multivector::pseudoscalar(cl23).scale(&Rational::new(4.into(), 5.into()));
        let mixing = Multivector::scalar(cl23, Rational::new(3.into(), 5.into()))
            + Multivector::blade(cl23, Blade(0b10001)).scale(&Rational::new(4.into(), 5.into()));
        let mut s = Sampler::new(seed ^ 11);
        let reduced = (0..20).all(|_| {
            let x = s.pin_element_any(Signature::cl13());
            let x5 = crate::embeddings::lift13(&x).expect("Cl(1,3) element");
            !classify(&x).flags.in_reduced_pin || (in_aut(&x5) && in_5d_aut(&x5))
        });
        let ok = in_5d_aut(&circle) && in_aut(&mixing) && !in_5d_aut(&mixing) && reduced;
        verdict(ok, "circle in 5D Aut; reduced Pin(1,3) samples inside", "membership mismatch")
    });
    c.check("spinors.13.reconstruction", "A = sum phi^-1(A^i_j) u_i u~^j", || {
        let mut s = Sampler::new(seed ^ 12);
        let ok = (0..30).all(|_| {
            let a = s.multivector(cl23, 0.5);
            space.reconstruct(&space.matrix_rep(&a)) == a
        });
        verdict(ok, "30 samples", "reconstruction failed")
    });
}
