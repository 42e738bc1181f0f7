//! Exact angles as rational linear forms over `{pi, alpha, beta, gamma}`.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::{int, rat, to_f64, Exact, Poly, QuadExt, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sym {
    Alpha,
    Beta,
    Gamma,
}

impl Sym {
    pub const ALL: [Sym; 3] = [Sym::Alpha, Sym::Beta, Sym::Gamma];

    fn slot(self) -> usize {
        match self {
            Sym::Alpha => 1,
            Sym::Beta => 2,
            Sym::Gamma => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sym::Alpha => "alpha",
            Sym::Beta => "beta",
            Sym::Gamma => "gamma",
        }
    }
}

/// `c[0]*pi + c[1]*alpha + c[2]*beta + c[3]*gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AngleForm {
    c: [Rational; 4],
}

impl AngleForm {
    pub fn zero() -> AngleForm {
        AngleForm {
            c: [
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
            ],
        }
    }

    pub fn from_coeffs(
        pi: Rational,
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
    ) -> AngleForm {
        AngleForm {
            c: [pi, alpha, beta, gamma],
        }
    }

    /// `(p/q) pi`.
    pub fn pi_frac(p: i64, q: i64) -> AngleForm {
        let mut f = AngleForm::zero();
        f.c[0] = rat(p, q);
        f
    }

    pub fn pi() -> AngleForm {
        AngleForm::pi_frac(1, 1)
    }

    pub fn sym(s: Sym) -> AngleForm {
        let mut f = AngleForm::zero();
        f.c[s.slot()] = Rational::one();
        f
    }

    pub fn alpha() -> AngleForm {
        AngleForm::sym(Sym::Alpha)
    }

    pub fn beta() -> AngleForm {
        AngleForm::sym(Sym::Beta)
    }

    pub fn gamma() -> AngleForm {
        AngleForm::sym(Sym::Gamma)
    }

    /// `i*alpha + j*beta + k*gamma`.
    pub fn combo(i: i64, j: i64, k: i64) -> AngleForm {
        AngleForm::from_coeffs(int(0), int(i), int(j), int(k))
    }

    pub fn pi_coeff(&self) -> &Rational {
        &self.c[0]
    }

    pub fn coeff(&self, s: Sym) -> &Rational {
        &self.c[s.slot()]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Rational `q` when the form is `q*pi`.
    pub fn pi_multiple(&self) -> Option<Rational> {
        self.c[1..]
            .iter()
            .all(|x| x.is_zero())
            .then(|| self.c[0].clone())
    }

    pub fn add(&self, o: &AngleForm) -> AngleForm {
        AngleForm {
            c: std::array::from_fn(|i| &self.c[i] + &o.c[i]),
        }
    }

    pub fn sub(&self, o: &AngleForm) -> AngleForm {
        AngleForm {
            c: std::array::from_fn(|i| &self.c[i] - &o.c[i]),
        }
    }

    pub fn scale(&self, k: &Rational) -> AngleForm {
        AngleForm {
            c: std::array::from_fn(|i| &self.c[i] * k),
        }
    }

    pub fn scale_int(&self, k: i64) -> AngleForm {
        self.scale(&int(k))
    }

    pub fn neg(&self) -> AngleForm {
        self.scale_int(-1)
    }

    pub fn uses(&self, s: Sym) -> bool {
        !self.c[s.slot()].is_zero()
    }

    pub fn normalize(&self, r: &RelationSet) -> AngleForm {
        r.normalize(self)
    }

    /// Numeric value in radians.
    pub fn eval(&self, a: &AngleAssignment) -> Result<f64> {
        let mut v = to_f64(&self.c[0]) * PI;
        for s in Sym::ALL {
            let k = &self.c[s.slot()];
            if k.is_zero() {
                continue;
            }
            let x = a
                .get(s)
                .ok_or_else(|| Error::MissingSymbol(s.name().into()))?;
            v += to_f64(k) * x;
        }
        Ok(v)
    }

    /// Exact cosine under `r`, see [`exact_cos`].
    pub fn exact_cos(&self, r: &RelationSet) -> Result<Exact> {
        exact_cos(self, r)
    }
}

/// Substitution rules, each eliminating one symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSet {
    rules: Vec<(Sym, AngleForm)>,
}

impl RelationSet {
    pub fn empty() -> RelationSet {
        RelationSet::default()
    }

    /// Builds a relation set; fails when a symbol is eliminated twice or the rules are cyclic.
    pub fn new(rules: Vec<(Sym, AngleForm)>) -> Result<RelationSet> {
        for (i, (s, _)) in rules.iter().enumerate() {
            if rules[..i].iter().any(|(t, _)| t == s) {
                return Err(Error::Domain(format!("{} eliminated twice", s.name())));
            }
        }
        // acyclic: repeatedly peel rules whose right-hand side only uses already resolved symbols
        let mut resolved: Vec<Sym> = Sym::ALL
            .iter()
            .copied()
            .filter(|s| !rules.iter().any(|(t, _)| t == s))
            .collect();
        let mut pending: Vec<&(Sym, AngleForm)> = rules.iter().collect();
        while !pending.is_empty() {
            let before = pending.len();
            pending.retain(|(s, f)| {
                let ready = Sym::ALL.iter().all(|t| !f.uses(*t) || resolved.contains(t));
                if ready {
                    resolved.push(*s);
                }
                !ready
            });
            if pending.len() == before {
                return Err(Error::Domain("cyclic relation set".into()));
            }
        }
        Ok(RelationSet { rules })
    }

    /// Assigns every symbol a rational multiple of pi.
    pub fn numeric(alpha: (i64, i64), beta: (i64, i64), gamma: (i64, i64)) -> RelationSet {
        RelationSet::new(vec![
            (Sym::Alpha, AngleForm::pi_frac(alpha.0, alpha.1)),
            (Sym::Beta, AngleForm::pi_frac(beta.0, beta.1)),
            (Sym::Gamma, AngleForm::pi_frac(gamma.0, gamma.1)),
        ])
        .expect("constant rules are acyclic")
    }

    pub fn rules(&self) -> &[(Sym, AngleForm)] {
        &self.rules
    }

    pub fn eliminates(&self, s: Sym) -> bool {
        self.rules.iter().any(|(t, _)| *t == s)
    }

    pub fn normalize(&self, f: &AngleForm) -> AngleForm {
        let mut cur = f.clone();
        // each pass removes every eliminated symbol at least one level deeper
        for _ in 0..=self.rules.len() {
            let mut changed = false;
            for (s, rhs) in &self.rules {
                let k = cur.c[s.slot()].clone();
                if k.is_zero() {
                    continue;
                }
                cur.c[s.slot()] = Rational::zero();
                cur = cur.add(&rhs.scale(&k));
                changed = true;
            }
            if !changed {
                break;
            }
        }
        cur
    }

    /// Whether the numeric assignment satisfies every rule within `tol`.
    pub fn satisfied_by(&self, a: &AngleAssignment, tol: f64) -> bool {
        self.rules
            .iter()
            .all(|(s, rhs)| match (a.get(*s), rhs.eval(a)) {
                (Some(x), Ok(y)) => (x - y).abs() <= tol,
                _ => false,
            })
    }
}

/// Numeric values for the symbols, in radians.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AngleAssignment {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
}

impl AngleAssignment {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> AngleAssignment {
        AngleAssignment {
            alpha: Some(alpha),
            beta: Some(beta),
            gamma: Some(gamma),
        }
    }

    pub fn get(&self, s: Sym) -> Option<f64> {
        match s {
            Sym::Alpha => self.alpha,
            Sym::Beta => self.beta,
            Sym::Gamma => self.gamma,
        }
    }
}

/// Exact cosine of `f` under `r`.
///
/// Supported: rational multiples of pi with reduced denominator in `1..=6`, and forms
/// `k*pi + n*beta` with integers `k, n`, whose cosine is `(-1)^k T_|n|(t)` for `t = cos beta`.
pub fn exact_cos(f: &AngleForm, r: &RelationSet) -> Result<Exact> {
    let g = r.normalize(f);
    if let Some(q) = g.pi_multiple() {
        return cos_pi_multiple(&q).ok_or_else(|| Error::NoExactCosine(g.to_string()));
    }
    let only_beta = !g.uses(Sym::Alpha) && !g.uses(Sym::Gamma);
    let k = g.pi_coeff();
    let n = g.coeff(Sym::Beta);
    if only_beta && k.is_integer() && n.is_integer() {
        let n = n
            .to_integer()
            .abs()
            .to_u32()
            .ok_or_else(|| Error::NoExactCosine(g.to_string()))?;
        let mut p = chebyshev(n);
        if k.to_integer().is_odd() {
            p = p.neg();
        }
        return Ok(Exact::Poly(p));
    }
    Err(Error::NoExactCosine(g.to_string()))
}

/// Chebyshev polynomial of the first kind, `cos(n x) = T_n(cos x)`.
pub fn chebyshev(n: u32) -> Poly {
    let (mut a, mut b) = (Poly::one(), Poly::t());
    if n == 0 {
        return a;
    }
    let two_t = Poly::from_ints(&[0, 2]);
    for _ in 1..n {
        let c = two_t.mul(&b).sub(&a);
        a = b;
        b = c;
    }
    b
}

fn cos_pi_multiple(q: &Rational) -> Option<Exact> {
    // reduce into [0, 2)
    let two = int(2);
    let mut r = q % &two;
    if r.is_negative() {
        r += &two;
    }
    // cos(x) = cos(2pi - x) folds into [0, 1]
    if r > int(1) {
        r = &two - r;
    }
    let den = r.denom().to_i64()?;
    let num = r.numer().to_i64()?;
    let half = rat(1, 2);
    let quad = |a: Rational, b: Rational, m: i64| Exact::Quad(QuadExt { a, b, m });
    Some(match (num, den) {
        (0, 1) => Exact::Rational(int(1)),
        (1, 1) => Exact::Rational(int(-1)),
        (1, 2) => Exact::Rational(int(0)),
        (1, 3) => Exact::Rational(half),
        (2, 3) => Exact::Rational(-half),
        (1, 4) => quad(int(0), half, 2),
        (3, 4) => quad(int(0), -half, 2),
        (1, 6) => quad(int(0), half, 3),
        (5, 6) => quad(int(0), -half, 3),
        (1, 5) => quad(rat(1, 4), rat(1, 4), 5),
        (2, 5) => quad(rat(-1, 4), rat(1, 4), 5),
        (3, 5) => quad(rat(1, 4), rat(-1, 4), 5),
        (4, 5) => quad(rat(-1, 4), rat(-1, 4), 5),
        _ => return None,
    })
}

fn fmt_coeff(f: &mut fmt::Formatter<'_>, k: &Rational, name: &str, first: bool) -> fmt::Result {
    let neg = k.is_negative();
    let a = k.abs();
    if neg {
        write!(f, "-")?;
    } else if !first {
        write!(f, "+")?;
    }
    if a.is_one() {
        write!(f, "{name}")
    } else if a.is_integer() {
        write!(f, "{a}*{name}")
    } else {
        write!(f, "{a} {name}")
    }
}

impl fmt::Display for AngleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["pi", "alpha", "beta", "gamma"];
        let mut first = true;
        for (k, name) in self.c.iter().zip(names) {
            if k.is_zero() {
                continue;
            }
            fmt_coeff(f, k, name, first)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for AngleForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<AngleForm> {
        Parser {
            s: s.as_bytes(),
            pos: 0,
            src: s,
        }
        .form()
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.src[start..self.pos].parse().ok()
    }

    fn atom(&mut self) -> Option<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let table: [(&str, usize); 8] = [
            ("pi", 0),
            ("π", 0),
            ("alpha", 1),
            ("α", 1),
            ("beta", 2),
            ("β", 2),
            ("gamma", 3),
            ("γ", 3),
        ];
        for (name, slot) in table {
            if rest.starts_with(name) {
                self.pos += name.len();
                return Some(slot);
            }
        }
        None
    }

    fn denominator(&mut self) -> Result<Option<i64>> {
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self
                .number()
                .ok_or_else(|| self.err("expected denominator"))?;
            if d == 0 {
                return Err(self.err("zero denominator"));
            }
            return Ok(Some(d));
        }
        Ok(None)
    }

    fn term(&mut self) -> Result<(Rational, Option<usize>)> {
        let mut k = Rational::one();
        let mut had_number = false;
        if let Some(n) = self.number() {
            had_number = true;
            k = int(n);
            if let Some(d) = self.denominator()? {
                k /= int(d);
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        match self.atom() {
            Some(slot) => {
                if let Some(d) = self.denominator()? {
                    k /= int(d);
                }
                Ok((k, Some(slot)))
            }
            None if had_number => Ok((k, None)),
            None => Err(self.err("expected pi, alpha, beta or gamma")),
        }
    }

    fn form(&mut self) -> Result<AngleForm> {
        let mut f = AngleForm::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if !first => break,
                None => return Err(self.err("empty angle literal")),
                Some(b'+') if !first => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return Err(self.err("expected + or -")),
            };
            first = false;
            let (k, slot) = self.term()?;
            match slot {
                Some(i) => f.c[i] += k * int(sign),
                // a bare number is only accepted as the zero literal
                None if k.is_zero() => {}
                None => return Err(self.err("bare number needs a unit such as pi")),
            }
        }
        Ok(f)
    }
}

impl Serialize for AngleForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AngleForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
