//! Naming what is being computed: an algebra family, its integer
//! parameters and the Dynkin label of the irrep.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{
    d21_closed_form, d21_sdim_t, invalid, ospb_sdim_t, ospd_sdim_t, osp1_closed_form, osp1_dim_t, so_even_dim_t,
    so_odd_dim_t, sp_closed_form, sp_dim_t, spinor_closed_form, spinor_tdim, CharacterError,
};
use crate::partitions::Partition;
use crate::schur::{dim_gl_weyl, sdim_gl};
use crate::series::{RationalFunction, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `osp(2m+1|2n)`, irrep `[0,…,0,p]`.
    OspOdd,
    /// `osp(2m|2n)`, irrep `[0,…,0,p]`.
    OspEven,
    /// `osp(1|2n)`, highest weight `(−p/2)^n`.
    Osp1,
    /// `so(2k+1)`, irrep `[0,…,0,p]`.
    SoOdd,
    /// `so(2k)`, irrep `[0,…,0,p]` or `[0,…,p,0]`.
    SoEven,
    /// `sp(2k)`, highest weight `(−p/2)^k`.
    Sp,
    /// `gl(n)`, covariant irrep `λ`.
    Gl,
    /// `gl(m|n)`, covariant irrep `λ`.
    GlSuper,
    /// `D(2,1;α)`, irrep `[0,0,p]`.
    D21Alpha,
    /// The superpolynomial space `P^{m|n}`, spinor of `osp(2m|2n)`.
    Spinor,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::OspOdd,
        Family::OspEven,
        Family::Osp1,
        Family::SoOdd,
        Family::SoEven,
        Family::Sp,
        Family::Gl,
        Family::GlSuper,
        Family::D21Alpha,
        Family::Spinor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::OspOdd => "ospB",
            Family::OspEven => "ospD",
            Family::Osp1 => "osp1",
            Family::SoOdd => "soOdd",
            Family::SoEven => "soEven",
            Family::Sp => "sp",
            Family::Gl => "gl",
            Family::GlSuper => "glSuper",
            Family::D21Alpha => "d21",
            Family::Spinor => "spinor",
        }
    }

    fn required(self) -> &'static [&'static str] {
        match self {
            Family::OspOdd | Family::OspEven | Family::Spinor => &["m", "n"],
            Family::Osp1 => &["n"],
            Family::SoOdd | Family::SoEven | Family::Sp => &["k"],
            Family::Gl => &["n", "lambda"],
            Family::GlSuper => &["m", "n", "lambda"],
            Family::D21Alpha => &["p"],
        }
    }

    fn optional(self) -> &'static [&'static str] {
        match self {
            Family::OspOdd | Family::OspEven | Family::Osp1 | Family::SoOdd | Family::Sp => &["p"],
            Family::SoEven => &["p", "chirality"],
            _ => &[],
        }
    }

    /// Whether the series counts superdimensions rather than dimensions.
    pub fn is_super(self) -> bool {
        matches!(self, Family::OspOdd | Family::OspEven | Family::D21Alpha | Family::GlSuper)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CharacterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                invalid(format!("unknown family {s:?}, expected one of {}", names.join(", ")))
            })
    }
}

/// Which of the two `so(2k)` labels carries `p`: `[0,…,0,p]` or `[0,…,p,0]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Chirality {
    #[default]
    Last,
    NextToLast,
}

impl Chirality {
    pub fn name(self) -> &'static str {
        match self {
            Chirality::Last => "last",
            Chirality::NextToLast => "next-to-last",
        }
    }
}

impl FromStr for Chirality {
    type Err = CharacterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "last" => Ok(Chirality::Last),
            "next-to-last" => Ok(Chirality::NextToLast),
            _ => Err(invalid(format!("unknown chirality {s:?}, expected last or next-to-last"))),
        }
    }
}

/// How a series is obtained: the defining (truncated) sum, or the expansion
/// of a rational closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Route {
    #[default]
    Sum,
    Closed,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Sum => "sum",
            Route::Closed => "closed",
        }
    }
}

impl FromStr for Route {
    type Err = CharacterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sum" => Ok(Route::Sum),
            "closed" => Ok(Route::Closed),
            _ => Err(invalid(format!("unknown route {s:?}, expected sum or closed"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Params {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub chirality: Option<Chirality>,
    pub lambda: Option<Partition>,
}

impl Params {
    fn present(&self) -> [(&'static str, bool); 6] {
        [
            ("m", self.m.is_some()),
            ("n", self.n.is_some()),
            ("k", self.k.is_some()),
            ("p", self.p.is_some()),
            ("chirality", self.chirality.is_some()),
            ("lambda", self.lambda.is_some()),
        ]
    }
}

/// The value of a character at `t = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Total {
    /// The series is a polynomial and this is its coefficient sum.
    Polynomial(BigRational),
    /// The series is infinite; this is the limit of its closed form.
    ClosedForm(BigRational),
    /// The closed form has a pole at `t = 1`.
    Divergent,
    /// Infinite series without a known closed form.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepSpec {
    family: Family,
    params: Params,
}

impl IrrepSpec {
    /// Validates that `params` holds exactly the parameters `family` uses.
    /// An absent `p` means `0`; an absent chirality means `Last`.
    pub fn new(family: Family, params: Params) -> Result<Self, CharacterError> {
        let name = family.name();
        for (param, present) in params.present() {
            let required = family.required().contains(&param);
            if required && !present {
                return Err(CharacterError::MissingParameter { family: name, param });
            }
            if present && !required && !family.optional().contains(&param) {
                return Err(CharacterError::UnexpectedParameter { family: name, param });
            }
        }
        let spec = IrrepSpec { family, params };
        match family {
            Family::Osp1 if spec.n() == 0 => Err(invalid("osp(1|2n) needs n >= 1")),
            Family::SoEven if spec.k() < 2 => Err(invalid("so(2k) needs k >= 2")),
            Family::Sp if spec.k() == 0 => Err(invalid("sp(2k) needs k >= 1")),
            Family::Gl if spec.n() == 0 => Err(invalid("gl(n) needs n >= 1")),
            Family::D21Alpha if spec.p() == 0 => Err(invalid("D(2,1;alpha) needs p >= 1")),
            _ => Ok(spec),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn m(&self) -> usize {
        self.params.m.unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.params.n.unwrap_or(0)
    }

    pub fn k(&self) -> usize {
        self.params.k.unwrap_or(0)
    }

    pub fn p(&self) -> usize {
        self.params.p.unwrap_or(0)
    }

    pub fn chirality(&self) -> Chirality {
        self.params.chirality.unwrap_or_default()
    }

    pub fn lambda(&self) -> Partition {
        self.params.lambda.clone().unwrap_or_default()
    }

    /// The algebra, e.g. `osp(7|2)` or `so(10)`.
    pub fn algebra(&self) -> String {
        let (m, n, k) = (self.m(), self.n(), self.k());
        match self.family {
            Family::OspOdd => format!("osp({}|{})", 2 * m + 1, 2 * n),
            Family::OspEven | Family::Spinor => format!("osp({}|{})", 2 * m, 2 * n),
            Family::Osp1 => format!("osp(1|{})", 2 * n),
            Family::SoOdd => format!("so({})", 2 * k + 1),
            Family::SoEven => format!("so({})", 2 * k),
            Family::Sp => format!("sp({})", 2 * k),
            Family::Gl => format!("gl({n})"),
            Family::GlSuper => format!("gl({m}|{n})"),
            Family::D21Alpha => "D(2,1;alpha)".to_string(),
        }
    }

    /// Dynkin label of the irrep, or the partition for `gl` families.
    pub fn label(&self) -> String {
        let p = self.p();
        match self.family {
            Family::OspOdd | Family::OspEven => dynkin(self.m() + self.n(), &p.to_string(), false),
            Family::Osp1 => dynkin(self.n(), &negated(p, 1), false),
            Family::SoOdd => dynkin(self.k(), &p.to_string(), false),
            Family::SoEven => dynkin(self.k(), &p.to_string(), self.chirality() == Chirality::NextToLast),
            Family::Sp => dynkin(self.k(), &negated(p, 2), false),
            Family::Gl | Family::GlSuper => self.lambda().to_string(),
            Family::D21Alpha => dynkin(3, &p.to_string(), false),
            Family::Spinor => format!("P^{{{}|{}}}", self.m(), self.n()),
        }
    }

    /// `dim_t`, or `sdim_t` for the super families, through order `order`.
    pub fn series(&self, order: usize, route: Route) -> Result<TruncatedSeries, CharacterError> {
        if route == Route::Closed {
            return Ok(self.closed_form()?.expand(order)?);
        }
        let (m, n, k, p) = (self.m(), self.n(), self.k(), self.p());
        match self.family {
            Family::OspOdd => ospb_sdim_t(m, n, p, order),
            Family::OspEven => ospd_sdim_t(m, n, p, order),
            Family::Osp1 => osp1_dim_t(n, p, order, Route::Sum),
            Family::SoOdd => so_odd_dim_t(k, p, order),
            Family::SoEven => so_even_dim_t(k, p, self.chirality(), order),
            Family::Sp => sp_dim_t(k, p, order),
            Family::D21Alpha => d21_sdim_t(p, order),
            Family::Spinor => Ok(spinor_tdim(m, n, order)),
            Family::Gl | Family::GlSuper => Err(invalid(format!(
                "{} irreps carry no level grading; use dim",
                self.family
            ))),
        }
    }

    /// A rational function whose expansion is the series, where one is known.
    /// For `osp` with more bosonic than fermionic pairs it is the classical
    /// counterpart at `−t`.
    pub fn closed_form(&self) -> Result<RationalFunction, CharacterError> {
        let (m, n, k, p) = (self.m(), self.n(), self.k(), self.p());
        let one = || RationalFunction::polynomial(vec![BigRational::one()]);
        match self.family {
            Family::Osp1 => osp1_closed_form(n, p),
            Family::Sp if p == 0 => Ok(one()),
            Family::Sp if p == 1 => sp_closed_form(k),
            Family::D21Alpha => d21_closed_form(p),
            Family::Spinor => spinor_closed_form(m, n),
            Family::OspOdd if n > m => Ok(osp1_closed_form(n - m, p)?.substitute_neg_t()),
            Family::OspEven if n > m && p == 0 => Ok(one()),
            Family::OspEven if n > m && p == 1 => Ok(sp_closed_form(n - m)?.substitute_neg_t()),
            _ => Err(CharacterError::NoClosedForm(format!("{} {}", self.algebra(), self.label()))),
        }
    }

    /// The (super)dimension at `t = 1`, read off the series when it is a
    /// polynomial and from the closed form otherwise.
    pub fn total(&self, series: &TruncatedSeries) -> Total {
        let at_one = series.eval_at_one();
        if at_one.polynomial {
            return Total::Polynomial(at_one.value);
        }
        match self.closed_form() {
            Ok(f) => match f.value_at(&BigRational::one()) {
                Some(v) => Total::ClosedForm(v),
                None => Total::Divergent,
            },
            Err(_) => Total::Unknown,
        }
    }

    /// `dim gl(n)^λ` or `sdim gl(m|n)^λ` for the `gl` families.
    pub fn gl_dimension(&self) -> Result<BigInt, CharacterError> {
        match self.family {
            Family::Gl => Ok(dim_gl_weyl(self.n(), &self.lambda())?),
            Family::GlSuper => Ok(sdim_gl(self.m(), self.n(), &self.lambda())),
            _ => Err(invalid(format!("{} is not a gl family", self.family))),
        }
    }
}

impl fmt::Display for IrrepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.label(), self.algebra())
    }
}

fn negated(p: usize, denom: usize) -> String {
    if p == 0 {
        "0".to_string()
    } else if p.is_multiple_of(denom) {
        format!("-{}", p / denom)
    } else {
        format!("-{p}/{denom}")
    }
}

fn dynkin(rank: usize, entry: &str, next_to_last: bool) -> String {
    let mut labels = vec!["0".to_string(); rank];
    if rank > 0 {
        let at = if next_to_last && rank >= 2 { rank - 2 } else { rank - 1 };
        labels[at] = entry.to_string();
    }
    format!("[{}]", labels.join(","))
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    family: String,
    m: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
    p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    chirality: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
    #[serde(default)]
    label: String,
}

impl Serialize for IrrepSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let p = &self.params;
        SpecRepr {
            family: self.family.name().to_string(),
            m: p.m,
            n: p.n,
            k: p.k,
            p: p.p,
            chirality: p.chirality.map(|c| c.name().to_string()),
            lambda: p.lambda.as_ref().map(Partition::to_string),
            label: self.label(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IrrepSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = SpecRepr::deserialize(deserializer)?;
        let family: Family = repr.family.parse().map_err(D::Error::custom)?;
        let params = Params {
            m: repr.m,
            n: repr.n,
            k: repr.k,
            p: repr.p,
            chirality: repr.chirality.map(|c| c.parse()).transpose().map_err(D::Error::custom)?,
            lambda: repr.lambda.map(|l| l.parse()).transpose().map_err(D::Error::custom)?,
        };
        IrrepSpec::new(family, params).map_err(D::Error::custom)
    }
}
