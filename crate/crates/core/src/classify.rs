//! Representation type of cyclotomic quiver Hecke algebra blocks of level
//! at least 3.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::maxweights::LevelKDominant;
use crate::quiver::{multiplicity_support, t_beta_sets};
use crate::weyl::{OrbitReducer, OrbitStatus};

/// Which case of the parameter `t` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TClass {
    /// `t = 2` (only meaningful for ell = 1).
    Two,
    /// `t = -2` (only meaningful for ell = 1).
    MinusTwo,
    /// `t = (-1)^(ell+1)` (only meaningful for ell >= 2).
    SignEll,
    Other,
}

impl FromStr for TClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "two" => Ok(TClass::Two),
            "minus-two" => Ok(TClass::MinusTwo),
            "sign-ell" => Ok(TClass::SignEll),
            "other" => Ok(TClass::Other),
            _ => Err(Error::InvalidFieldParams(format!("unknown t class {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldParams {
    pub char_p: u64,
    pub t_class: TClass,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl FieldParams {
    pub fn new(char_p: u64, t_class: TClass) -> Self {
        FieldParams { char_p, t_class }
    }

    pub fn validate(&self, ell: usize) -> Result<()> {
        if self.char_p != 0 && !is_prime(self.char_p) {
            return Err(Error::InvalidFieldParams(format!("characteristic {} is neither 0 nor prime", self.char_p)));
        }
        let ok = match self.t_class {
            TClass::Two | TClass::MinusTwo => ell == 1,
            TClass::SignEll => ell >= 2,
            TClass::Other => true,
        };
        if !ok {
            return Err(Error::InvalidFieldParams(format!("t class {:?} does not apply when ell = {ell}", self.t_class)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepType {
    Zero,
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepType::Zero => "Zero",
            RepType::Finite => "Finite",
            RepType::Tame => "Tame",
            RepType::Wild => "Wild",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptSets {
    /// The finite set: `{0}`, the `st[0]` intervals and `alpha_i` with `m_i >= 2`.
    pub finite: BTreeSet<RootVector>,
    /// `st[j]` for `j = 0..=5`; `st[1..=5]` together form the tame set.
    pub st: [BTreeSet<RootVector>; 6],
}

impl ScriptSets {
    pub fn tame_union(&self) -> BTreeSet<RootVector> {
        self.st[1..].iter().flatten().cloned().collect()
    }
}

fn check_level(base: &LevelKDominant) -> Result<()> {
    if base.k() < 3 {
        // Levels 1 and 2 are classified by separate, earlier results and are
        // deliberately not handled here.
        return Err(Error::LevelTooSmall { k: base.k(), min: 3 });
    }
    Ok(())
}

pub fn script_sets(base: &LevelKDominant, char_p: u64) -> Result<ScriptSets> {
    check_level(base)?;
    let rank = base.rank();
    let e = rank.e();
    let m = base.coeffs();
    let t = t_beta_sets(base);
    let root = |terms: &[(i64, i64)]| {
        let mut c = vec![0i64; e];
        for &(i, mult) in terms {
            c[rank.idx(i)] += mult;
        }
        RootVector { coeffs: c }
    };
    let interval = |a: usize, b: usize| {
        let len = (b + e - a) % e + 1;
        let terms: Vec<(i64, i64)> = (0..len).map(|s| ((a + s) as i64, 1)).collect();
        root(&terms)
    };

    let support = multiplicity_support(base, 0);
    let h = support.len();
    let mut st: [BTreeSet<RootVector>; 6] = Default::default();
    for j in 0..h {
        let i = support[j];
        let prev = support[(j + h - 1) % h];
        let next = support[(j + 1) % h];
        let ii = i as i64;
        if h >= 2 && next != (i + e - 1) % e {
            let ones = (m[i] == 1) as u8 + (m[next] == 1) as u8;
            if ones == 2 {
                st[0].insert(interval(i, next));
            } else if ones == 1 {
                st[1].insert(interval(i, next));
            }
        }
        let prev_far = prev != rank.idx(ii - 1);
        let next_far = next != rank.idx(ii + 1);
        if m[i] == 2 && char_p != 2 && prev_far && next_far {
            st[2].insert(root(&[(ii, 2), (ii - 1, 1), (ii + 1, 1)]));
        }
        if m[i] == 3 && char_p != 3 {
            if next_far {
                st[3].insert(root(&[(ii, 2), (ii + 1, 1)]));
            }
            if prev_far {
                st[3].insert(root(&[(ii, 2), (ii - 1, 1)]));
            }
        }
        if m[i] == 4 && char_p != 2 {
            st[4].insert(root(&[(ii, 2)]));
        }
        for &p in &support {
            if p != i && m[i] == 2 && m[p] == 2 && p != rank.idx(ii + 1) && p != rank.idx(ii - 1) {
                st[5].insert(root(&[(ii, 1), (p as i64, 1)]));
            }
        }
    }
    // Each script set lives inside the corresponding stratum of T(Lambda);
    // the intersection drops candidates that stratum excludes at small ell.
    let source = [0u8, 0, 2, 3, 4, 5];
    for (s, set) in st.iter_mut().enumerate() {
        set.retain(|b| t[&source[s]].contains(b));
    }
    let mut finite: BTreeSet<RootVector> = st[0].clone();
    finite.insert(RootVector::zero(rank));
    finite.extend(t[&1].iter().cloned());
    Ok(ScriptSets { finite, st })
}

/// Classifies blocks of a fixed base weight; caches the reduction data.
#[derive(Debug, Clone)]
pub struct Classifier {
    reducer: OrbitReducer,
    params: FieldParams,
    sets: ScriptSets,
    tame: BTreeSet<RootVector>,
}

impl Classifier {
    pub fn new(base: &LevelKDominant, params: FieldParams) -> Result<Self> {
        check_level(base)?;
        params.validate(base.rank().ell())?;
        let sets = script_sets(base, params.char_p)?;
        let tame = sets.tame_union();
        Ok(Classifier { reducer: OrbitReducer::new(base), params, sets, tame })
    }

    pub fn script_sets(&self) -> &ScriptSets {
        &self.sets
    }

    pub fn classify(&self, beta: &RootVector) -> Result<RepType> {
        let res = self.reducer.reduce(beta)?;
        if res.status == OrbitStatus::Zero {
            return Ok(RepType::Zero);
        }
        Ok(self.classify_reduced(&res.beta0, res.m))
    }

    /// Classifies `beta0 + m delta` with `beta0` already in the plus set.
    pub fn classify_reduced(&self, beta0: &RootVector, m: i64) -> RepType {
        let base = self.reducer.base();
        if beta0.is_zero() {
            return match m {
                0 => RepType::Finite,
                1 => {
                    let single = base.coeffs().iter().filter(|&&c| c > 0).count() == 1;
                    if single && self.params.t_class == TClass::Other {
                        RepType::Tame
                    } else {
                        RepType::Wild
                    }
                }
                _ => RepType::Wild,
            };
        }
        if m >= 1 {
            return RepType::Wild;
        }
        if self.sets.finite.contains(beta0) {
            RepType::Finite
        } else if self.tame.contains(beta0) {
            RepType::Tame
        } else {
            RepType::Wild
        }
    }
}

pub fn classify(base: &LevelKDominant, beta: &RootVector, params: FieldParams) -> Result<RepType> {
    Classifier::new(base, params)?.classify(beta)
}
