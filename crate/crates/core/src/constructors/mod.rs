//! Named groups as permutation groups, and the family registry that the
//! group-spec grammar is read from.

mod field;
mod spec;

pub use field::{FpScalar, Mat2};
pub use spec::{parse_spec, GroupSpec, SpecError};

use num_integer::Integer;

use crate::arith::{is_prime, pow_mod};
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Largest `n` for `S(n)` / `A(n)` whose order fits in `u64`.
const MAX_SYMMETRIC_DEGREE: u64 = 20;
/// Largest prime accepted by `SL(2,p)` / `PSL(2,p)`.
pub const MAX_LINEAR_PRIME: u64 = 13;

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameter(msg.into())
}

fn cycle_on(degree: usize, points: impl Iterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.collect();
    Permutation::from_cycles(degree, &[&pts]).expect("distinct points")
}

/// `C_n` generated by an `n`-cycle.
pub fn cyclic(n: u64) -> Result<PermGroup> {
    if n < 1 {
        return Err(invalid("C(n) requires n >= 1"));
    }
    let n = n as usize;
    PermGroup::new(vec![cycle_on(n, 0..n)], n)
}

pub fn symmetric(n: u64) -> Result<PermGroup> {
    if !(1..=MAX_SYMMETRIC_DEGREE).contains(&n) {
        return Err(invalid(format!(
            "S(n) requires 1 <= n <= {MAX_SYMMETRIC_DEGREE}"
        )));
    }
    let n = n as usize;
    let mut gens = vec![cycle_on(n, 0..n)];
    if n > 2 {
        gens.push(cycle_on(n, 0..2));
    }
    PermGroup::new(gens, n)
}

/// `A_n` generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: u64) -> Result<PermGroup> {
    if !(1..=MAX_SYMMETRIC_DEGREE).contains(&n) {
        return Err(invalid(format!(
            "A(n) requires 1 <= n <= {MAX_SYMMETRIC_DEGREE}"
        )));
    }
    let n = n as usize;
    let gens = (2..n).map(|i| cycle_on(n, [0, 1, i].into_iter())).collect();
    PermGroup::new(gens, n)
}

pub fn klein4() -> PermGroup {
    let a = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
    let b = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
    PermGroup::new(vec![a, b], 4).unwrap()
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon.
pub fn dihedral(n: u64) -> Result<PermGroup> {
    if n < 3 {
        return Err(invalid("D(n) requires n >= 3"));
    }
    let n = n as usize;
    let rotation = cycle_on(n, 0..n);
    let reflection =
        Permutation::from_images((0..n).map(|x| (n - x) % n).collect()).expect("x ↦ -x");
    PermGroup::new(vec![rotation, reflection], n)
}

/// Checks the conditions under which `⟨s, r | s^n = r^m = 1, r^s = r^t⟩`
/// has order `nm` and is non-abelian.
pub fn check_nm_parameters(n: u64, m: u64, t: u64) -> Result<()> {
    if n < 2 {
        return Err(invalid(format!("NM({n},{m},{t}): n >= 2 violated")));
    }
    if m < 3 {
        return Err(invalid(format!("NM({n},{m},{t}): m >= 3 violated")));
    }
    if !(1 < t && t < m) {
        return Err(invalid(format!("NM({n},{m},{t}): 1 < t < m violated")));
    }
    if t.gcd(&m) != 1 {
        return Err(invalid(format!(
            "NM({n},{m},{t}): gcd(t, m) = 1 violated (gcd = {})",
            t.gcd(&m)
        )));
    }
    let residue = pow_mod(t, n, m);
    if residue != 1 {
        return Err(invalid(format!(
            "NM({n},{m},{t}): t^n ≡ 1 (mod m) violated ({t}^{n} ≡ {residue} mod {m})"
        )));
    }
    Ok(())
}

/// The (n,m)-group `C_m ⋊ C_n` on `m + n` points.
///
/// `r` cycles the first `m` points. `s` multiplies them by `t` modulo `m`
/// and cycles the last `n` points, so `s⁻¹ r s = r^t` and `⟨r⟩` is normal.
pub fn nm_group(n: u64, m: u64, t: u64) -> Result<PermGroup> {
    check_nm_parameters(n, m, t)?;
    let (n, m) = (n as usize, m as usize);
    let degree = m + n;
    let r = cycle_on(degree, 0..m);
    let s_images = (0..m)
        .map(|x| (x as u64 * t % m as u64) as usize)
        .chain((0..n).map(|i| m + (i + 1) % n))
        .collect();
    let s = Permutation::from_images(s_images)?;
    PermGroup::new(vec![r, s], degree)
}

fn check_linear_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if p > MAX_LINEAR_PRIME {
        return Err(invalid(format!(
            "p = {p} exceeds the supported maximum {MAX_LINEAR_PRIME}"
        )));
    }
    Ok(())
}

fn linear_generators(p: u64) -> Result<[Mat2; 2]> {
    Ok([
        Mat2::new([[1, 1], [0, 1]], p)?,
        Mat2::new([[0, 1], [-1, 0]], p)?,
    ])
}

/// `SL₂(p)` acting on the `p² − 1` nonzero row vectors of `F_p²`.
pub fn sl2(p: u64) -> Result<PermGroup> {
    check_linear_prime(p)?;
    let index = |(x, y): (FpScalar, FpScalar)| (x.value() * p + y.value()) as usize - 1;
    let vectors: Vec<(FpScalar, FpScalar)> = (0..p)
        .flat_map(|x| (0..p).map(move |y| (x, y)))
        .filter(|&(x, y)| (x, y) != (0, 0))
        .map(|(x, y)| (FpScalar::new(x as i64, p), FpScalar::new(y as i64, p)))
        .map(|(x, y)| Ok((x?, y?)))
        .collect::<Result<_>>()?;
    let gens = linear_generators(p)?
        .iter()
        .map(|m| Permutation::from_images(vectors.iter().map(|&v| index(m.apply(v))).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(gens, vectors.len())
}

/// `PSL₂(p)` acting on the `p + 1` points of the projective line:
/// `[x : 1] ↦ x` and `[1 : 0] ↦ p`.
pub fn psl2(p: u64) -> Result<PermGroup> {
    check_linear_prime(p)?;
    let point = |x: u64| -> Result<(FpScalar, FpScalar)> {
        if x < p {
            Ok((FpScalar::new(x as i64, p)?, FpScalar::new(1, p)?))
        } else {
            Ok((FpScalar::new(1, p)?, FpScalar::new(0, p)?))
        }
    };
    let index = |(u, v): (FpScalar, FpScalar)| -> usize {
        match v.inverse() {
            Some(v_inv) => (u * v_inv).value() as usize,
            None => p as usize,
        }
    };
    let points = (0..=p).map(point).collect::<Result<Vec<_>>>()?;
    let gens = linear_generators(p)?
        .iter()
        .map(|m| Permutation::from_images(points.iter().map(|&v| index(m.apply(v))).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(gens, points.len())
}

/// One named family of groups in the spec grammar, e.g. `D(n)`.
pub trait GroupFamily: Send + Sync {
    /// Token used in spec strings.
    fn name(&self) -> &'static str;
    /// Number of integer parameters.
    fn arity(&self) -> usize;
    /// Human-readable signature, e.g. `NM(n,m,t)`.
    fn signature(&self) -> &'static str;
    fn validate(&self, params: &[u64]) -> Result<()>;
    fn build(&self, params: &[u64]) -> Result<PermGroup>;
    /// Closed-form order of the group described by `params`.
    fn expected_order(&self, params: &[u64]) -> Result<u64>;
}

macro_rules! family {
    ($ty:ident, $name:literal, $sig:literal, $arity:literal,
     validate = |$vp:ident| $validate:expr,
     build = |$bp:ident| $build:expr,
     order = |$op:ident| $order:expr $(,)?) => {
        #[derive(Debug, Default, Clone, Copy)]
        pub struct $ty;

        impl GroupFamily for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn arity(&self) -> usize {
                $arity
            }
            fn signature(&self) -> &'static str {
                $sig
            }
            fn validate(&self, $vp: &[u64]) -> Result<()> {
                $validate
            }
            fn build(&self, $bp: &[u64]) -> Result<PermGroup> {
                self.validate($bp)?;
                $build
            }
            fn expected_order(&self, $op: &[u64]) -> Result<u64> {
                self.validate($op)?;
                $order
            }
        }
    };
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn require_degree_two(kind: &str, params: &[u64]) -> Result<()> {
    if params[0] != 2 {
        return Err(invalid(format!(
            "{kind}({},p): only degree 2 is supported",
            params[0]
        )));
    }
    check_linear_prime(params[1])
}

family!(
    CyclicFamily,
    "C",
    "C(n)",
    1,
    validate = |p| if p[0] >= 1 {
        Ok(())
    } else {
        Err(invalid("C(n) requires n >= 1"))
    },
    build = |p| cyclic(p[0]),
    order = |p| Ok(p[0]),
);

family!(
    DihedralFamily,
    "D",
    "D(n)",
    1,
    validate = |p| if p[0] >= 3 {
        Ok(())
    } else {
        Err(invalid("D(n) requires n >= 3"))
    },
    build = |p| dihedral(p[0]),
    order = |p| Ok(2 * p[0]),
);

family!(
    SymmetricFamily,
    "S",
    "S(n)",
    1,
    validate = |p| if (1..=MAX_SYMMETRIC_DEGREE).contains(&p[0]) {
        Ok(())
    } else {
        Err(invalid(format!(
            "S(n) requires 1 <= n <= {MAX_SYMMETRIC_DEGREE}"
        )))
    },
    build = |p| symmetric(p[0]),
    order = |p| Ok(factorial(p[0])),
);

family!(
    AlternatingFamily,
    "A",
    "A(n)",
    1,
    validate = |p| if (1..=MAX_SYMMETRIC_DEGREE).contains(&p[0]) {
        Ok(())
    } else {
        Err(invalid(format!(
            "A(n) requires 1 <= n <= {MAX_SYMMETRIC_DEGREE}"
        )))
    },
    build = |p| alternating(p[0]),
    order = |p| Ok(if p[0] < 2 { 1 } else { factorial(p[0]) / 2 }),
);

family!(
    KleinFamily,
    "K4",
    "K4",
    0,
    validate = |_p| Ok(()),
    build = |_p| Ok(klein4()),
    order = |_p| Ok(4),
);

family!(
    NmFamily,
    "NM",
    "NM(n,m,t)",
    3,
    validate = |p| check_nm_parameters(p[0], p[1], p[2]),
    build = |p| nm_group(p[0], p[1], p[2]),
    order = |p| Ok(p[0] * p[1]),
);

family!(
    SpecialLinearFamily,
    "SL",
    "SL(2,p)",
    2,
    validate = |p| require_degree_two("SL", p),
    build = |p| sl2(p[1]),
    order = |p| Ok(p[1] * (p[1] * p[1] - 1)),
);

family!(
    ProjectiveSpecialLinearFamily,
    "PSL",
    "PSL(2,p)",
    2,
    validate = |p| require_degree_two("PSL", p),
    build = |p| psl2(p[1]),
    order = |p| Ok(p[1] * (p[1] * p[1] - 1) / (p[1] - 1).gcd(&2)),
);

/// Group families addressable by name from spec strings.
pub struct FamilyRegistry {
    families: Vec<Box<dyn GroupFamily>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        Self {
            families: Vec::new(),
        }
    }

    /// `C, D, S, A, K4, NM, SL, PSL`.
    pub fn standard() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(CyclicFamily));
        reg.register(Box::new(DihedralFamily));
        reg.register(Box::new(SymmetricFamily));
        reg.register(Box::new(AlternatingFamily));
        reg.register(Box::new(KleinFamily));
        reg.register(Box::new(NmFamily));
        reg.register(Box::new(SpecialLinearFamily));
        reg.register(Box::new(ProjectiveSpecialLinearFamily));
        reg
    }

    /// Adds a family, replacing any previous one with the same name.
    pub fn register(&mut self, family: Box<dyn GroupFamily>) {
        self.families.retain(|f| f.name() != family.name());
        self.families.push(family);
    }

    pub fn get(&self, name: &str) -> Option<&dyn GroupFamily> {
        self.families
            .iter()
            .find(|f| f.name() == name)
            .map(|f| f.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.iter().map(|f| f.name())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn GroupFamily> {
        self.families.iter().map(|f| f.as_ref())
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_orders() {
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(klein4().order(), 4);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(dihedral(3).unwrap().order(), symmetric(3).unwrap().order());
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(cyclic(0).is_err());
        assert!(dihedral(2).is_err());
        assert!(symmetric(0).is_err());
        assert!(symmetric(21).is_err());
    }

    #[test]
    fn nm_group_order_and_structure() {
        let g = nm_group(4, 5, 2).unwrap();
        assert_eq!(g.order(), 20);
        assert_eq!(g.degree(), 9);
        let r = g.generators()[0].clone();
        let s = g.generators()[1].clone();
        assert_eq!(r.conjugate_by(&s), r.pow(2));
        let n = g.sub(vec![r]);
        let h = g.sub(vec![s]);
        assert!(g.is_normal(&n).unwrap());
        assert_eq!((n.order(), h.order()), (5, 4));
        assert!(!g.is_abelian());
    }

    #[test]
    fn nm_constraint_messages_name_the_violation() {
        let err = nm_group(3, 5, 2).unwrap_err().to_string();
        assert!(err.contains("t^n ≡ 1 (mod m)"), "{err}");
        assert!(err.contains("≡ 3 mod 5"), "{err}");
        assert!(nm_group(2, 6, 3).unwrap_err().to_string().contains("gcd"));
        assert!(nm_group(2, 5, 1)
            .unwrap_err()
            .to_string()
            .contains("1 < t < m"));
        assert!(nm_group(1, 5, 4).is_err());
    }

    #[test]
    fn linear_group_orders() {
        assert_eq!(psl2(5).unwrap().order(), 60);
        assert_eq!(sl2(5).unwrap().order(), 120);
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert_eq!(sl2(7).unwrap().order(), 336);
        assert_eq!(sl2(2).unwrap().order(), 6);
        assert_eq!(psl2(3).unwrap().order(), 12);
        assert_eq!(sl2(5).unwrap().degree(), 24);
        assert_eq!(psl2(7).unwrap().degree(), 8);
        assert!(matches!(sl2(4), Err(GroupError::NotPrime(4))));
        assert!(sl2(17).is_err());
    }

    #[test]
    fn registry_orders_match_closed_forms() {
        let reg = FamilyRegistry::standard();
        let cases: &[(&str, &[u64])] = &[
            ("C", &[12]),
            ("D", &[7]),
            ("S", &[5]),
            ("A", &[4]),
            ("K4", &[]),
            ("NM", &[2, 7, 6]),
            ("SL", &[2, 3]),
            ("PSL", &[2, 11]),
        ];
        for (name, params) in cases {
            let fam = reg.get(name).unwrap();
            assert_eq!(fam.arity(), params.len());
            assert_eq!(
                fam.build(params).unwrap().order(),
                fam.expected_order(params).unwrap(),
                "{name}{params:?}"
            );
        }
        assert!(reg.get("Q").is_none());
    }
}
