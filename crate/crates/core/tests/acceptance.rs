//! Acceptance criteria, one line per criterion. All comparisons are exact.

use std::path::PathBuf;
use std::process::Command;

use orbifold_ring::chow::{ChowBasisIndex, ChowRing};
use orbifold_ring::cli::{output::canonical_json, run_with, DynChowRing, DynModelRing, RingSource, StandardRings};
use orbifold_ring::element::Element;
use orbifold_ring::isomorphism::{verify_all, XiMap};
use orbifold_ring::model::{ModelElement, ModelRing, XiPower};
use orbifold_ring::ring::GradedRing;
use orbifold_ring::unity::{RootOfUnity, SectorEnumeration, Weights};
use orbifold_ring::Rational;

type Outcome = Result<String, String>;

fn weights(w: &[i64]) -> Weights {
    Weights::new(w).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let args = SectorEnumeration::new(&weights(&[1, 2, 3])).args();
    let expected = vec![q(0, 1), q(0, 1), q(0, 1), q(1, 3), q(1, 2), q(2, 3)];
    ensure(args == expected, || format!("γs = {args:?}"))?;
    Ok("γs = [0,0,0,1/3,1/2,2/3]".into())
}

fn criterion_2() -> Outcome {
    let model = ModelRing::new(weights(&[1, 2, 3]));
    let expected: Vec<Rational> = [0, 1, 2, 1, 1, 1].map(Rational::from_integer).to_vec();
    ensure(model.degrees() == expected.as_slice(), || format!("{:?}", model.degrees()))?;
    Ok("deg(ξ^0..ξ^5) = (0,1,2,1,1,1)".into())
}

/// The multiplication table for w = (1,2,3) as printed in the reference,
/// `None` for a zero entry, `Some(k)` for ξ^k.
const MULT_123: [[Option<usize>; 6]; 6] = [
    [Some(0), Some(1), Some(2), Some(3), Some(4), Some(5)],
    [Some(1), Some(2), None, None, None, None],
    [Some(2), None, None, None, None, None],
    [Some(3), None, None, None, None, Some(2)],
    [Some(4), None, None, None, Some(2), None],
    [Some(5), None, None, Some(2), None, None],
];

fn criterion_3() -> Outcome {
    let model = ModelRing::new(weights(&[1, 2, 3]));
    for (j, row) in MULT_123.iter().enumerate() {
        for (k, cell) in row.iter().enumerate() {
            let got = model.basis_cup(&XiPower(j), &XiPower(k));
            let want: ModelElement = cell.map_or_else(Element::zero, |t| Element::basis(XiPower(t)));
            ensure(got == want, || format!("ξ^{j} ∪ ξ^{k} = {got}, expected {want}"))?;
        }
    }
    Ok("36/36 entries match".into())
}

fn criterion_4() -> Outcome {
    let model = ModelRing::new(weights(&[1, 2, 3]));
    let sixth = q(1, 6);
    for j in 0..6 {
        for k in 0..6 {
            let anti_diagonal = (j < 3 && k < 3 && j + k == 2) || (j >= 3 && k >= 3 && j + k == 8);
            let want = if anti_diagonal { sixth } else { q(0, 1) };
            let got = model.basis_pairing(&XiPower(j), &XiPower(k));
            ensure(got == want, || format!("⟨ξ^{j}, ξ^{k}⟩ = {got}, expected {want}"))?;
        }
    }
    Ok("1/6 on both 3×3 anti-diagonals, 0 elsewhere".into())
}

fn criterion_5() -> Outcome {
    let xi = XiMap::new(&weights(&[1, 2, 3]));
    let table = [((0, 1, 0), 0), ((0, 1, 1), 1), ((0, 1, 2), 2), ((1, 3, 0), 5), ((1, 2, 0), 4), ((2, 3, 0), 3)];
    for ((p, d, power), j) in table {
        let b = ChowBasisIndex::new(RootOfUnity::new(p, d), power);
        let got = xi.image(&b).map_err(|e| e.to_string())?;
        ensure(got == XiPower(j), || format!("Ξ({b}) = {got}, expected ξ^{j}"))?;
    }
    Ok("Ξ: η_1^0..η_1^2 → 1,ξ,ξ²; η_j^0 → ξ⁵; η_{-1}^0 → ξ⁴; η_{j²}^0 → ξ³".into())
}

fn criterion_6() -> Outcome {
    for m in 1..=8usize {
        let w = weights(&vec![1; m]);
        let model = ModelRing::new(w.clone());
        for j in 0..m {
            let d = model.degree(j).unwrap();
            ensure(d == Rational::from_integer(j as i64), || format!("m={m}: deg(ξ^{j}) = {d}"))?;
            for k in 0..m {
                let got = model.basis_cup(&XiPower(j), &XiPower(k));
                let want = if j + k < m {
                    Element::basis(XiPower(j + k))
                } else {
                    Element::zero()
                };
                ensure(got == want, || format!("m={m}: ξ^{j} ∪ ξ^{k} = {got}"))?;
            }
        }
        let report = verify_all(&w);
        ensure(report.passed(), || format!("m={m}: verification failed"))?;
    }
    Ok("m = 1..8 truncated polynomial rings, degrees j".into())
}

fn sweep_weights() -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = orbifold_ring::cli::sweep_vectors(3, 6).collect();
    out.extend([vec![1, 2, 2, 3, 3, 3], vec![7, 5], vec![4, 6]]);
    out
}

/// Check names every weight vector must report, with at least one instance
/// each (the Gorenstein check is only instantiated on Gorenstein vectors).
const REQUIRED: &[&str] = &[
    "unity/fixed-set-inverse",
    "unity/fractional-part-reflection",
    "unity/age-reflection",
    "unity/enumeration-bijection",
    "unity/count-at-most",
    "unity/plateau",
    "unity/k-min-closed-form",
    "unity/k-max-closed-form",
    "unity/k-min-extended",
    "unity/partition",
    "unity/age-defect",
    "model/degree-bounds",
    "model/subadditivity",
    "model/degree-decomposition",
    "model/dual-index",
    "chow/basis-count",
    "chow/degree-bounds",
    "chow/product-power",
    "chow/unit",
    "chow/commutativity",
    "chow/associativity",
    "chow/graded",
    "chow/frobenius",
    "chow/perfectness",
    "model/unit",
    "model/commutativity",
    "model/associativity",
    "model/graded",
    "model/frobenius",
    "model/perfectness",
    "xi/basis-bijection",
    "xi/graded",
    "xi/ring-morphism",
    "xi/pairing",
];

fn criterion_7() -> Outcome {
    let vectors = sweep_weights();
    let mut inputs = 0usize;
    for raw in &vectors {
        let w = weights(raw);
        let report = verify_all(&w);
        if let Some(fail) = report.failures().next() {
            return Err(format!("{raw:?}: {} failed: {:?}", fail.check, fail.counterexample));
        }
        for name in REQUIRED {
            let record = report.record(name).ok_or_else(|| format!("{raw:?}: {name} missing"))?;
            ensure(record.inputs > 0, || format!("{raw:?}: {name} ran no instances"))?;
        }
        let total = w.total() as usize;
        let triples = total.pow(3);
        for name in ["chow/associativity", "chow/frobenius", "model/associativity", "model/frobenius"] {
            let n = report.record(name).unwrap().inputs;
            ensure(n == triples, || format!("{raw:?}: {name} covered {n} of {triples} triples"))?;
        }
        let basis = ChowRing::new(w.clone()).basis().len();
        ensure(basis == total, || format!("{raw:?}: basis has {basis} elements"))?;
        inputs += report.total_inputs();
    }
    Ok(format!("{} weight vectors, {inputs} instances, 0 counterexamples", vectors.len()))
}

fn criterion_8() -> Outcome {
    let mut gorenstein = 0;
    // Converse direction is only observed, never asserted.
    let mut integral_otherwise = 0;
    for raw in sweep_weights() {
        let w = weights(&raw);
        let divides = w.entries().iter().all(|&wi| w.total() % wi == 0);
        let model = ModelRing::new(w);
        let bad = model.degrees().iter().find(|d| !d.is_integer());
        match (divides, bad) {
            (true, Some(d)) => return Err(format!("{raw:?}: degree {d} is not an integer")),
            (true, None) => gorenstein += 1,
            (false, None) => integral_otherwise += 1,
            (false, Some(_)) => {}
        }
    }
    Ok(format!(
        "{gorenstein} Gorenstein vectors, all degrees integral \
         (observed: {integral_otherwise} non-Gorenstein vectors with integral degrees)"
    ))
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn binary(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbifold-ring"))
        .args(args)
        .env_remove("ORBIFOLD_RING_MAX_TOTAL")
        .output()
        .expect("spawn orbifold-ring");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

/// Model ring whose product `ξ^1 ∪ ξ^1` is wrongly reported as `ξ^3`.
struct CorruptedModel(ModelRing);

impl GradedRing for CorruptedModel {
    type Basis = XiPower;

    fn name(&self) -> &'static str {
        self.0.name()
    }
    fn weights(&self) -> &Weights {
        self.0.weights()
    }
    fn basis(&self) -> &[XiPower] {
        self.0.basis()
    }
    fn unit(&self) -> XiPower {
        self.0.unit()
    }
    fn basis_degree(&self, b: &XiPower) -> Rational {
        self.0.basis_degree(b)
    }
    fn basis_cup(&self, x: &XiPower, y: &XiPower) -> ModelElement {
        if (x.0, y.0) == (1, 1) {
            Element::basis(XiPower(3))
        } else {
            self.0.basis_cup(x, y)
        }
    }
    fn basis_pairing(&self, x: &XiPower, y: &XiPower) -> Rational {
        self.0.integral(&self.basis_cup(x, y))
    }
}

struct CorruptedRings;

impl RingSource for CorruptedRings {
    fn chow(&self, w: &Weights) -> Box<DynChowRing> {
        StandardRings.chow(w)
    }
    fn model(&self, w: &Weights) -> Box<DynModelRing> {
        Box::new(CorruptedModel(ModelRing::new(w.clone())))
    }
}

fn criterion_9() -> Outcome {
    for (args, file) in [
        (["table", "deg", "1", "2", "3"], "deg_model_1_2_3.txt"),
        (["table", "mult", "1", "2", "3"], "mult_model_1_2_3.txt"),
        (["table", "pairing", "1", "2", "3"], "pairing_model_1_2_3.txt"),
    ] {
        let (code, out) = binary(&args);
        ensure(code == 0, || format!("{args:?} exited {code}"))?;
        ensure(out == golden(file), || format!("{args:?} differs from {file}:\n{out}"))?;
    }

    for args in [
        &["--format", "json", "table", "mult", "1", "2", "3"][..],
        &["--format", "json", "info", "1", "2", "3"],
        &["--format", "json", "verify", "1", "2", "3"],
        &["--format", "json", "poincare", "1", "1", "3"],
    ] {
        let (_, out) = binary(args);
        let value: serde_json::Value = serde_json::from_str(&out).map_err(|e| format!("{args:?}: {e}"))?;
        ensure(canonical_json(&value) == out, || format!("{args:?}: JSON is not byte-stable"))?;
    }

    let codes = [
        (binary(&["verify", "1", "2", "3"]).0, 0, "verify 1 2 3"),
        (binary(&["info", "0", "2"]).0, 2, "info 0 2"),
        (binary(&["info", "1", "abc"]).0, 2, "info 1 abc"),
        (binary(&["info", "4294967296", "4294967296"]).0, 2, "overflow"),
    ];
    for (got, want, what) in codes {
        ensure(got == want, || format!("{what}: exit {got}, expected {want}"))?;
    }

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(["orbifold-ring", "verify", "1", "2", "3"], &CorruptedRings, &mut out, &mut err);
    ensure(code == 1, || format!("corrupted build: exit {code}, expected 1"))?;
    let text = String::from_utf8(out).unwrap();
    ensure(text.contains("FAIL") && text.contains("status: fail"), || text.clone())?;
    Ok("3 text goldens byte-identical, JSON byte-stable, exit codes 0/1/2".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 enumeration of (1,2,3)", criterion_1),
        ("2 degree table of (1,2,3)", criterion_2),
        ("3 multiplication table of (1,2,3)", criterion_3),
        ("4 pairing matrix of (1,2,3)", criterion_4),
        ("5 Xi assignments of (1,2,3)", criterion_5),
        ("6 (1,...,1) truncated polynomial rings", criterion_6),
        ("7 exhaustive sweep", criterion_7),
        ("8 Gorenstein integrality", criterion_8),
        ("9 CLI goldens, JSON, exit codes", criterion_9),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
