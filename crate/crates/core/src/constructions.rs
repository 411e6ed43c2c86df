//! The three parameterized families: faithful covers of `K_n` built from a
//! transitive `L ≤ S_n` fixing a point, dihedral pseudocovers of `K_{2m+1}`,
//! and abelian pseudocovers of `K_{ab+1}`. Permutations are written 1-based
//! exactly as in the constructions and converted on parse.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::cosetgraph::CosetGraphSpec;
use crate::error::{Error, Result};
use crate::group::{factorial, GiantKind, PermGroup};
use crate::perm::Permutation;
use crate::quotient::{self, ExtenderKind, ELEMENT_CAP};

fn cyc(n: usize, cycles: &[Vec<usize>]) -> Permutation {
    let zero: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| c.iter().map(|&p| p - 1).collect())
        .collect();
    Permutation::from_cycles(n, &zero).expect("well-formed cycles")
}

/// Generators of the named subgroups of `S_n` fixing point 1 and transitive on the rest.
pub const COVERSN_PRESETS: [&str; 5] = ["cyclic", "z2sq", "z4", "d8", "a4"];

pub fn coversn_preset(name: &str, n: usize) -> Result<Vec<Permutation>> {
    let fixed5 = |gens: &[&str]| -> Result<Vec<Permutation>> {
        if n != 5 {
            return Err(Error::InvalidParameter(format!("preset {name} needs n = 5")));
        }
        gens.iter().map(|g| Permutation::parse_cycles(g, 5)).collect()
    };
    match name {
        "cyclic" => {
            if n < 3 {
                return Err(Error::InvalidParameter("preset cyclic needs n >= 3".into()));
            }
            Ok(vec![cyc(n, &[(2..=n).collect()])])
        }
        "z2sq" => fixed5(&["(2,3)(4,5)", "(2,4)(3,5)"]),
        "z4" => fixed5(&["(2,3,4,5)"]),
        "d8" => fixed5(&["(2,3,4,5)", "(3,5)"]),
        "a4" => fixed5(&["(2,3,4)", "(2,3)(4,5)"]),
        other => Err(Error::InvalidParameter(format!(
            "unknown preset {other:?}; expected one of {}",
            COVERSN_PRESETS.join(", ")
        ))),
    }
}

/// Covers of `K_n`: `L ≤ S_n` fixes `ω` and is transitive on the other points,
/// `g0` fixes `ω, ω'`, normalizes `L_{ω'}`, and `g0² ∈ L`; then `g = (ω ω') g0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoversnRecipe {
    pub n: usize,
    pub omega: usize,
    pub omega_prime: usize,
    pub l_generators: Vec<Permutation>,
    pub g0: Permutation,
}

impl CoversnRecipe {
    /// `ω = 1`, `ω' = 2`, `g0 = 1`.
    pub fn new(n: usize, l_generators: Vec<Permutation>) -> Result<Self> {
        let r = CoversnRecipe {
            n,
            omega: 0,
            omega_prime: 1,
            l_generators,
            g0: Permutation::identity(n),
        };
        r.validate()?;
        Ok(r)
    }

    pub fn preset(name: &str, n: usize) -> Result<Self> {
        Self::new(n, coversn_preset(name, n)?)
    }

    pub fn with_g0(mut self, g0: Permutation) -> Result<Self> {
        self.g0 = g0;
        self.validate()?;
        Ok(self)
    }

    /// Collects every violated precondition.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n < 4 {
            return Err(Error::InvalidParameter(format!("n = {n} must be at least 4")));
        }
        if self.omega >= n || self.omega_prime >= n || self.omega == self.omega_prime {
            return Err(Error::InvalidParameter(
                "omega and omega_prime must be distinct points".into(),
            ));
        }
        if let Some(p) = self
            .l_generators
            .iter()
            .chain(std::iter::once(&self.g0))
            .find(|p| p.degree() != n)
        {
            return Err(Error::DegreeMismatch {
                left: n,
                right: p.degree(),
            });
        }
        let (w, w2) = (self.omega, self.omega_prime);
        let mut problems = Vec::new();
        let l = PermGroup::new(n, self.l_generators.clone())?;
        if self.l_generators.iter().any(|s| s.image(w) != w) {
            problems.push(format!("L does not fix omega = {}", w + 1));
        } else if l.orbit(w2)?.len() != n - 1 {
            problems.push(format!("L is not transitive on the points other than {}", w + 1));
        }
        if self.g0.image(w) != w || self.g0.image(w2) != w2 {
            problems.push(format!("g0 = {} does not fix {} and {}", self.g0, w + 1, w2 + 1));
        }
        let l_w2 = l.point_stabilizer(w2)?;
        if !l_w2.is_normalized_by(&self.g0) {
            problems.push(format!("g0 = {} does not normalize L_{}", self.g0, w2 + 1));
        }
        if !l.has(&self.g0.then(&self.g0)) {
            problems.push(format!("g0^2 is not in L for g0 = {}", self.g0));
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidSpec(problems.join("; ")))
        }
    }

    pub fn g(&self) -> Permutation {
        Permutation::from_cycles(self.n, &[vec![self.omega, self.omega_prime]])
            .unwrap()
            .then(&self.g0)
    }
}

/// `L = ⟨a², b⟩` and `g = (1,2)(3,4)` on `2m+1` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct K2mRecipe {
    pub m: usize,
}

impl K2mRecipe {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("m = {m} must be at least 2")));
        }
        Ok(K2mRecipe { m })
    }

    pub fn n(&self) -> usize {
        2 * self.m + 1
    }

    /// `(2, 3, …, 2m+1)`.
    pub fn a(&self) -> Permutation {
        cyc(self.n(), &[(2..=self.n()).collect()])
    }

    /// `(3, 2m+1)(4, 2m)⋯(m+1, m+3)`.
    pub fn b(&self) -> Permutation {
        let n = self.n();
        let pairs: Vec<Vec<usize>> = (3..=self.m + 1).map(|i| vec![i, 2 * self.m + 4 - i]).collect();
        cyc(n, &pairs)
    }

    pub fn g(&self) -> Permutation {
        cyc(self.n(), &[vec![1, 2], vec![3, 4]])
    }

    pub fn l_generators(&self) -> Vec<Permutation> {
        let a = self.a();
        vec![a.then(&a), self.b()]
    }
}

/// `L = ⟨x, y⟩ ≅ Z_a × Z_b` and `g = g1 g2` on `ab+1` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KabRecipe {
    pub a: usize,
    pub b: usize,
}

impl KabRecipe {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a < 2 || a > b {
            return Err(Error::InvalidParameter(format!(
                "need 1 < a <= b, got a = {a}, b = {b}"
            )));
        }
        Ok(KabRecipe { a, b })
    }

    pub fn n(&self) -> usize {
        self.a * self.b + 1
    }

    /// `a-1` disjoint `b`-cycles `(1..b)(b+1..2b)⋯`.
    pub fn x(&self) -> Permutation {
        let b = self.b;
        let cycles: Vec<Vec<usize>> = (0..self.a - 1)
            .map(|k| (k * b + 1..=(k + 1) * b).collect())
            .collect();
        cyc(self.n(), &cycles)
    }

    /// The `a`-cycle `((a-1)b+1, …, (a-1)b+a)`.
    pub fn y(&self) -> Permutation {
        let s = (self.a - 1) * self.b;
        cyc(self.n(), &[(s + 1..=s + self.a).collect()])
    }

    /// `(b, b+1)(2b, 2b+1)⋯((a-1)b, (a-1)b+1)`.
    pub fn g1(&self) -> Permutation {
        let pairs: Vec<Vec<usize>> = (1..self.a).map(|k| vec![k * self.b, k * self.b + 1]).collect();
        cyc(self.n(), &pairs)
    }

    /// `(1, (a-1)b+a+1)(2, (a-1)b+a+2)⋯(b-a+1, ab+1)`.
    pub fn g2(&self) -> Permutation {
        let s = (self.a - 1) * self.b + self.a;
        let pairs: Vec<Vec<usize>> = (1..=self.b - self.a + 1).map(|t| vec![t, s + t]).collect();
        cyc(self.n(), &pairs)
    }

    pub fn g(&self) -> Permutation {
        self.g1().then(&self.g2())
    }

    pub fn l_generators(&self) -> Vec<Permutation> {
        vec![self.x(), self.y()]
    }

    /// `z_k = y^((gx)^k)`.
    pub fn z(&self, k: usize) -> Permutation {
        let gx = self.g().then(&self.x());
        self.y().conjugate_unchecked(&gx.pow(k as u64))
    }

    /// `((a-k-1)b+1, (a-1)b+2, …, (a-1)b+a)`.
    pub fn z_closed_form(&self, k: usize) -> Permutation {
        let s = (self.a - 1) * self.b;
        let mut cycle = vec![(self.a - k - 1) * self.b + 1];
        cycle.extend(s + 2..=s + self.a);
        cyc(self.n(), &[cycle])
    }
}

fn spec_from(n: usize, l_gens: Vec<Permutation>, g: Permutation) -> Result<CosetGraphSpec> {
    let l = PermGroup::new(n, l_gens.clone())?;
    let mut all = l_gens;
    all.push(g.clone());
    let group = PermGroup::new(n, all)?;
    CosetGraphSpec::new(group, l, g)
}

pub fn build_faithful_cover(r: &CoversnRecipe) -> Result<CosetGraphSpec> {
    r.validate()?;
    spec_from(r.n, r.l_generators.clone(), r.g())
}

pub fn build_dihedral_pseudocover(r: &K2mRecipe) -> Result<CosetGraphSpec> {
    spec_from(r.n(), r.l_generators(), r.g())
}

pub fn build_abelian_pseudocover(r: &KabRecipe) -> Result<CosetGraphSpec> {
    spec_from(r.n(), r.l_generators(), r.g())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictedGroup {
    Symmetric,
    Alternating,
    /// `GL(3,2)` in its action on 7 points, recognized by order 168.
    Gl32,
}

impl PredictedGroup {
    pub fn matches(self, g: &PermGroup) -> bool {
        match self {
            PredictedGroup::Symmetric => g.classify_giant() == GiantKind::Symmetric,
            PredictedGroup::Alternating => g.classify_giant() == GiantKind::Alternating,
            PredictedGroup::Gl32 => g.degree() == 7 && g.order() == BigUint::from(168u32),
        }
    }
}

impl fmt::Display for PredictedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PredictedGroup::Symmetric => "symmetric",
            PredictedGroup::Alternating => "alternating",
            PredictedGroup::Gl32 => "gl32",
        })
    }
}

pub fn predicted_group_kab(a: usize, b: usize) -> PredictedGroup {
    if a % 2 == 1 && b.is_multiple_of(2) {
        PredictedGroup::Alternating
    } else {
        PredictedGroup::Symmetric
    }
}

pub fn predicted_group_k2m(m: usize) -> PredictedGroup {
    match m {
        3 => PredictedGroup::Gl32,
        _ if m.is_multiple_of(2) => PredictedGroup::Symmetric,
        _ => PredictedGroup::Alternating,
    }
}

/// One named check with its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// An ordered list of checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{status} {}", c.name)?;
            } else {
                writeln!(f, "{status} {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

/// Checks `z_k` against its closed form for every `k < a`, and that
/// `P = ⟨L, z_1, …, z_{a-1}⟩` fixes `n` with `|Alt((a-1)b+a)|` dividing `|P|`.
pub fn verify_zk_formula(r: &KabRecipe) -> Report {
    let mut report = Report::default();
    let tag = format!("kab({},{})", r.a, r.b);
    for k in 0..r.a {
        let z = r.z(k);
        let expected = r.z_closed_form(k);
        report.check(
            format!("{tag} z_{k} closed form"),
            z == expected,
            format!("z_{k} = {z}, expected {expected}"),
        );
    }
    let mut gens = r.l_generators();
    gens.extend((1..r.a).map(|k| r.z(k)));
    let p = PermGroup::new(r.n(), gens).expect("same degree");
    let n = r.n() - 1;
    report.check(
        format!("{tag} P fixes n"),
        p.generators().iter().all(|s| s.image(n) == n),
        "",
    );
    let m = (r.a - 1) * r.b + r.a;
    let alt = factorial(m) / 2u32;
    let order = p.order();
    report.check(
        format!("{tag} |Alt({m})| divides |P|"),
        &order % &alt == BigUint::ZERO,
        format!("|P| = {order}"),
    );
    report
}

/// `[a²b, g] = (1,2m,2)(3,4)(2m-1,2m-2)` and its square is a 3-cycle; needs `m ≥ 4`.
pub fn verify_consdih_commutator(r: &K2mRecipe) -> Result<Report> {
    let m = r.m;
    if m < 4 {
        return Err(Error::InvalidParameter(format!(
            "the commutator formula is stated for m >= 4, got m = {m}"
        )));
    }
    let a = r.a();
    let c = a.then(&a).then(&r.b());
    let y = c.commutator(&r.g())?;
    let expected = cyc(
        r.n(),
        &[vec![1, 2 * m, 2], vec![3, 4], vec![2 * m - 1, 2 * m - 2]],
    );
    let mut report = Report::default();
    report.check(
        format!("k2m({m}) commutator"),
        y == expected,
        format!("[a^2 b, g] = {y}"),
    );
    let y2 = y.then(&y);
    report.check(
        format!("k2m({m}) y^2 is a 3-cycle"),
        y2.cycles().len() == 1 && y2.cycles()[0].len() == 3,
        format!("y^2 = {y2}"),
    );
    Ok(report)
}

fn trivial_intersection(spec: &CosetGraphSpec) -> Result<bool> {
    let l = spec.subgroup();
    let meet = l.intersect_small(&l.conjugate(spec.g())?, ELEMENT_CAP)?;
    Ok(meet.is_trivial())
}

fn pseudocover_verdict(spec: &CosetGraphSpec, omega: usize, report: &mut Report, tag: &str) -> Result<()> {
    let h = spec.group().point_stabilizer(omega)?;
    let v = quotient::classify_extender(spec, &h)?;
    report.check(
        format!("{tag} pseudocover verdict"),
        v.kind == ExtenderKind::Pseudocover && v.connected,
        v.to_string(),
    );
    Ok(())
}

/// Every claim attached to the dihedral family at one `m`.
pub fn verify_k2m(m: usize) -> Result<Report> {
    let r = K2mRecipe::new(m)?;
    let spec = build_dihedral_pseudocover(&r)?;
    let tag = format!("k2m({m})");
    let mut report = Report::default();
    let g = spec.group();
    report.check(
        format!("{tag} |L| = 2m"),
        spec.subgroup().order() == BigUint::from(2 * m),
        format!("|L| = {}", spec.subgroup().order()),
    );
    report.check(format!("{tag} L meet L^g trivial"), trivial_intersection(&spec)?, "");
    report.check(format!("{tag} G 2-transitive"), g.is_2_transitive()?, "");
    let predicted = predicted_group_k2m(m);
    report.check(
        format!("{tag} G is {predicted}"),
        predicted.matches(g),
        format!("|G| = {}", g.order()),
    );
    pseudocover_verdict(&spec, 0, &mut report, &tag)?;
    if m >= 4 {
        report.extend(verify_consdih_commutator(&r)?);
    }
    Ok(report)
}

/// Every claim attached to the abelian family at one `(a, b)`.
pub fn verify_kab(a: usize, b: usize) -> Result<Report> {
    let r = KabRecipe::new(a, b)?;
    let spec = build_abelian_pseudocover(&r)?;
    let tag = format!("kab({a},{b})");
    let n = r.n();
    let mut report = Report::default();
    let g = r.g();
    report.check(format!("{tag} g^2 = 1"), g.then(&g).is_identity(), format!("g = {g}"));
    report.check(
        format!("{tag} [g1,g2] = 1"),
        r.g1().commutator(&r.g2())?.is_identity(),
        "",
    );
    report.check(
        format!("{tag} [x,y] = 1"),
        r.x().commutator(&r.y())?.is_identity(),
        "",
    );
    let l = spec.subgroup();
    report.check(
        format!("{tag} |L| = ab"),
        l.order() == BigUint::from(a * b),
        format!("|L| = {}", l.order()),
    );
    report.check(
        format!("{tag} L fixes n"),
        l.generators().iter().all(|s| s.image(n - 1) == n - 1),
        "",
    );
    let y = r.y();
    report.check(
        format!("{tag} y fixes 1..b and n"),
        (0..b).chain([n - 1]).all(|p| y.image(p) == p),
        "",
    );
    report.check(format!("{tag} L meet L^g trivial"), trivial_intersection(&spec)?, "");
    let grp = spec.group();
    report.check(format!("{tag} G transitive"), grp.is_transitive(), "");
    report.check(format!("{tag} G 2-transitive"), grp.is_2_transitive()?, "");
    let predicted = predicted_group_kab(a, b);
    let expected_order = match predicted {
        PredictedGroup::Alternating => factorial(n) / 2u32,
        _ => factorial(n),
    };
    report.check(
        format!("{tag} |G| = {}", if predicted == PredictedGroup::Alternating { "n!/2" } else { "n!" }),
        grp.order() == expected_order,
        format!("|G| = {}", grp.order()),
    );
    report.extend(verify_zk_formula(&r));
    pseudocover_verdict(&spec, n - 1, &mut report, &tag)?;
    Ok(report)
}

/// A recipe read from a key-value file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Coversn(CoversnRecipe),
    K2m(K2mRecipe),
    Kab(KabRecipe),
}

impl Recipe {
    pub fn build(&self) -> Result<CosetGraphSpec> {
        match self {
            Recipe::Coversn(r) => build_faithful_cover(r),
            Recipe::K2m(r) => build_dihedral_pseudocover(r),
            Recipe::Kab(r) => build_abelian_pseudocover(r),
        }
    }

    /// The point `ω` whose stabilizer gives the complete quotient.
    pub fn omega(&self) -> usize {
        match self {
            Recipe::Coversn(r) => r.omega,
            Recipe::K2m(_) => 0,
            Recipe::Kab(r) => r.n() - 1,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Recipe::Coversn(r) => r.n,
            Recipe::K2m(r) => r.n(),
            Recipe::Kab(r) => r.n(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Recipe::Coversn(_) => "coversn",
            Recipe::K2m(_) => "k2m",
            Recipe::Kab(_) => "kab",
        }
    }

    /// The key-value text form, readable by [`Recipe::from_str`].
    pub fn to_text(&self) -> String {
        let mut s = format!("kind = {}\n", self.kind());
        match self {
            Recipe::Coversn(r) => {
                s += &format!("n = {}\n", r.n);
                s += &format!("omega = {}\n", r.omega + 1);
                s += &format!("omega_prime = {}\n", r.omega_prime + 1);
                for l in &r.l_generators {
                    s += &format!("L = {l}\n");
                }
                s += &format!("g0 = {}\n", r.g0);
            }
            Recipe::K2m(r) => s += &format!("m = {}\n", r.m),
            Recipe::Kab(r) => s += &format!("a = {}\nb = {}\n", r.a, r.b),
        }
        s
    }
}

impl FromStr for Recipe {
    type Err = Error;

    /// Lines `key = value`; `#` starts a comment. `L` may repeat and may name a preset.
    fn from_str(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut ints: Vec<(String, usize)> = Vec::new();
        let mut l_specs: Vec<String> = Vec::new();
        let mut g0: Option<String> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Format(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "kind" => kind = Some(value.to_string()),
                "L" => l_specs.push(value.to_string()),
                "g0" => g0 = Some(value.to_string()),
                "n" | "m" | "a" | "b" | "omega" | "omega_prime" => {
                    let v = value.parse().map_err(|_| {
                        Error::Format(format!("line {}: {key} must be an integer", lineno + 1))
                    })?;
                    ints.push((key.to_string(), v));
                }
                other => return Err(Error::Format(format!("line {}: unknown key {other:?}", lineno + 1))),
            }
        }
        let get = |k: &str| ints.iter().rev().find(|(key, _)| key == k).map(|&(_, v)| v);
        let need = |k: &str| get(k).ok_or_else(|| Error::Format(format!("missing key {k}")));
        match kind.as_deref() {
            Some("coversn") => {
                let n = need("n")?;
                let mut l_gens = Vec::new();
                for s in &l_specs {
                    if s.starts_with('(') {
                        l_gens.push(Permutation::parse_cycles(s, n)?);
                    } else {
                        l_gens.extend(coversn_preset(s, n)?);
                    }
                }
                let to_point = |v: usize| {
                    if v == 0 || v > n {
                        Err(Error::PointOutOfRange { point: v, degree: n })
                    } else {
                        Ok(v - 1)
                    }
                };
                let r = CoversnRecipe {
                    n,
                    omega: to_point(get("omega").unwrap_or(1))?,
                    omega_prime: to_point(get("omega_prime").unwrap_or(2))?,
                    l_generators: l_gens,
                    g0: match &g0 {
                        Some(s) => Permutation::parse_cycles(s, n)?,
                        None => Permutation::identity(n),
                    },
                };
                r.validate()?;
                Ok(Recipe::Coversn(r))
            }
            Some("k2m") => Ok(Recipe::K2m(K2mRecipe::new(need("m")?)?)),
            Some("kab") => Ok(Recipe::Kab(KabRecipe::new(need("a")?, need("b")?)?)),
            Some(other) => Err(Error::Format(format!("unknown kind {other:?}"))),
            None => Err(Error::Format("missing key kind".into())),
        }
    }
}
