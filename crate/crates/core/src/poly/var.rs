use std::fmt;
use std::str::FromStr;

use super::PolyError;

/// One variable of the genus-`g` Tutte polynomial. Pair variables are indexed
/// by `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    X(u32),
    Y(u32),
    XCap(u32, u32),
    YCap(u32, u32),
    XCup(u32, u32),
    YCup(u32, u32),
}

fn ordered(i: u32, j: u32) -> (u32, u32) {
    (i.min(j), i.max(j))
}

impl VarId {
    pub fn xcap(i: u32, j: u32) -> Self {
        let (i, j) = ordered(i, j);
        VarId::XCap(i, j)
    }

    pub fn ycap(i: u32, j: u32) -> Self {
        let (i, j) = ordered(i, j);
        VarId::YCap(i, j)
    }

    pub fn xcup(i: u32, j: u32) -> Self {
        let (i, j) = ordered(i, j);
        VarId::XCup(i, j)
    }

    pub fn ycup(i: u32, j: u32) -> Self {
        let (i, j) = ordered(i, j);
        VarId::YCup(i, j)
    }

    /// True if the variable refers to subset index `k`.
    pub fn involves(self, k: u32) -> bool {
        match self {
            VarId::X(i) | VarId::Y(i) => i == k,
            VarId::XCap(i, j) | VarId::YCap(i, j) | VarId::XCup(i, j) | VarId::YCup(i, j) => {
                i == k || j == k
            }
        }
    }

    /// Largest subset index mentioned.
    pub fn max_index(self) -> u32 {
        match self {
            VarId::X(i) | VarId::Y(i) => i,
            VarId::XCap(_, j) | VarId::YCap(_, j) | VarId::XCup(_, j) | VarId::YCup(_, j) => j,
        }
    }

    /// Applies a relabeling of subset indices, renormalizing pairs.
    pub fn map_indices(self, f: impl Fn(u32) -> u32) -> Self {
        match self {
            VarId::X(i) => VarId::X(f(i)),
            VarId::Y(i) => VarId::Y(f(i)),
            VarId::XCap(i, j) => VarId::xcap(f(i), f(j)),
            VarId::YCap(i, j) => VarId::ycap(f(i), f(j)),
            VarId::XCup(i, j) => VarId::xcup(f(i), f(j)),
            VarId::YCup(i, j) => VarId::ycup(f(i), f(j)),
        }
    }
}

/// `x1, y1, ..., xg, yg`, then for each pair `(i, j)` in lexicographic order
/// `xcap{i,j}, ycap{i,j}, xcup{i,j}, ycup{i,j}`. `2g²` variables in total.
pub fn canonical_var_order(genus: usize) -> Result<Vec<VarId>, PolyError> {
    if genus == 0 {
        return Err(PolyError::ZeroGenus);
    }
    let g = genus as u32;
    let mut vars = Vec::with_capacity(2 * genus * genus);
    for i in 1..=g {
        vars.push(VarId::X(i));
        vars.push(VarId::Y(i));
    }
    for i in 1..=g {
        for j in i + 1..=g {
            vars.extend([
                VarId::XCap(i, j),
                VarId::YCap(i, j),
                VarId::XCup(i, j),
                VarId::YCup(i, j),
            ]);
        }
    }
    Ok(vars)
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::X(i) => write!(f, "x{i}"),
            VarId::Y(i) => write!(f, "y{i}"),
            VarId::XCap(i, j) => write!(f, "xcap{{{i},{j}}}"),
            VarId::YCap(i, j) => write!(f, "ycap{{{i},{j}}}"),
            VarId::XCup(i, j) => write!(f, "xcup{{{i},{j}}}"),
            VarId::YCup(i, j) => write!(f, "ycup{{{i},{j}}}"),
        }
    }
}

impl FromStr for VarId {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PolyError::Malformed(format!("unknown variable {s:?}"));
        let index = |t: &str| -> Result<u32, PolyError> {
            match t.parse::<u32>() {
                Ok(v) if v >= 1 && !t.starts_with('+') => Ok(v),
                _ => Err(bad()),
            }
        };
        let pair = |t: &str| -> Result<(u32, u32), PolyError> {
            let inner = t
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let (a, b) = (index(a)?, index(b)?);
            if a >= b {
                return Err(bad());
            }
            Ok((a, b))
        };
        if let Some(rest) = s.strip_prefix("xcap") {
            let (i, j) = pair(rest)?;
            Ok(VarId::XCap(i, j))
        } else if let Some(rest) = s.strip_prefix("ycap") {
            let (i, j) = pair(rest)?;
            Ok(VarId::YCap(i, j))
        } else if let Some(rest) = s.strip_prefix("xcup") {
            let (i, j) = pair(rest)?;
            Ok(VarId::XCup(i, j))
        } else if let Some(rest) = s.strip_prefix("ycup") {
            let (i, j) = pair(rest)?;
            Ok(VarId::YCup(i, j))
        } else if let Some(rest) = s.strip_prefix('x') {
            Ok(VarId::X(index(rest)?))
        } else if let Some(rest) = s.strip_prefix('y') {
            Ok(VarId::Y(index(rest)?))
        } else {
            Err(bad())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(g: usize) -> Vec<String> {
        canonical_var_order(g)
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    #[test]
    fn genus_one_and_two_orders() {
        assert_eq!(names(1), ["x1", "y1"]);
        assert_eq!(
            names(2),
            [
                "x1",
                "y1",
                "x2",
                "y2",
                "xcap{1,2}",
                "ycap{1,2}",
                "xcup{1,2}",
                "ycup{1,2}"
            ]
        );
    }

    #[test]
    fn variable_count_is_two_g_squared() {
        for g in 1..=6 {
            assert_eq!(canonical_var_order(g).unwrap().len(), 2 * g * g);
        }
        assert_eq!(canonical_var_order(3).unwrap().len(), 18);
        assert_eq!(canonical_var_order(0), Err(PolyError::ZeroGenus));
    }

    #[test]
    fn names_round_trip() {
        for v in canonical_var_order(4).unwrap() {
            assert_eq!(v.to_string().parse::<VarId>().unwrap(), v);
        }
        for bad in ["z1", "x0", "x", "xcap{2,1}", "xcap{1,1}", "ycup1,2", "x+1"] {
            assert!(bad.parse::<VarId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn pair_constructors_normalize() {
        assert_eq!(VarId::xcap(3, 1), VarId::XCap(1, 3));
        assert_eq!(VarId::X(1).map_indices(|i| 3 - i), VarId::X(2));
        assert_eq!(VarId::XCup(1, 2).map_indices(|i| 3 - i), VarId::XCup(1, 2));
        assert!(VarId::YCap(1, 3).involves(3));
        assert!(!VarId::YCap(1, 3).involves(2));
    }
}
