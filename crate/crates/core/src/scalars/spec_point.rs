use super::cyclotomic::CycElem;
use super::ratfn::RatFn;
use super::rational::parse_rational;
use crate::error::{Error, Result};

/// Where scalars are evaluated.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecPoint {
    Generic,
    /// t = q, keeping q symbolic.
    Cpa,
    Numeric {
        q: CycElem,
        t: CycElem,
    },
}

impl SpecPoint {
    /// q = t = 1, so a = 0.
    pub fn group() -> SpecPoint {
        SpecPoint::Numeric {
            q: CycElem::one(),
            t: CycElem::one(),
        }
    }

    /// q = t = q₀, so a = (q₀ − 1)/b.
    pub fn finite(q0: i64) -> SpecPoint {
        SpecPoint::Numeric {
            q: CycElem::from_int(q0),
            t: CycElem::from_int(q0),
        }
    }

    pub fn numeric(q: CycElem, t: CycElem) -> Result<SpecPoint> {
        if q.is_zero() || t.is_zero() {
            return Err(Error::SingularPoint("q and t must be nonzero".into()));
        }
        Ok(SpecPoint::Numeric { q, t })
    }

    /// Parses `generic`, `cpa`, `group`, `finite:Q` or `q=Q,t=T`.
    pub fn parse(s: &str) -> Result<SpecPoint> {
        let s = s.trim();
        let bad = |msg: String| Error::ParseError { pos: 0, msg };
        match s {
            "generic" => return Ok(SpecPoint::Generic),
            "cpa" => return Ok(SpecPoint::Cpa),
            "group" => return Ok(SpecPoint::group()),
            _ => {}
        }
        if let Some(q0) = s.strip_prefix("finite:") {
            let q0: i64 = q0
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad prime power in {s:?}")))?;
            if q0 < 2 {
                return Err(Error::InvalidParameters(format!(
                    "finite point needs q ≥ 2, got {q0}"
                )));
            }
            return Ok(SpecPoint::finite(q0));
        }
        let mut q = None;
        let mut t = None;
        for part in s.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| bad(format!("unknown specialization {s:?}")))?;
            let v = CycElem::rational(parse_rational(v)?);
            match k.trim() {
                "q" => q = Some(v),
                "t" => t = Some(v),
                other => return Err(bad(format!("unknown variable {other:?}"))),
            }
        }
        match (q, t) {
            (Some(q), Some(t)) => SpecPoint::numeric(q, t),
            _ => Err(bad(format!("need both q and t in {s:?}"))),
        }
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, SpecPoint::Generic)
    }

    /// Evaluation at a numeric point.
    pub fn specialize(&self, r: &RatFn) -> Result<CycElem> {
        match self {
            SpecPoint::Numeric { q, t } => r.eval(q, t),
            _ => Err(Error::InvalidParameters(
                "specialize needs a numeric point".into(),
            )),
        }
    }

    /// Image in the function field: identity, t := q, or a constant.
    pub fn apply(&self, r: &RatFn) -> Result<RatFn> {
        match self {
            SpecPoint::Generic => Ok(r.clone()),
            SpecPoint::Cpa => r.diagonal(),
            SpecPoint::Numeric { .. } => Ok(RatFn::constant(self.specialize(r)?)),
        }
    }
}
