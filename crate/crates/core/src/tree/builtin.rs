//! Named trees: the rooted building blocks `R3`, `R19`, `R20` and the
//! small-order caterpillars `G8` ... `G17`.

use std::fmt;
use std::str::FromStr;

use super::{caterpillar, RootedTree, Tree, TreeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    K1,
    P2,
    /// `P3` rooted at its middle vertex; the same rooted tree as [`Builtin::R3`].
    P3MidRooted,
    R3,
    R19,
    R20,
    G8,
    G11,
    G13,
    G14,
    G16,
    G17,
}

impl Builtin {
    pub const ALL: [Builtin; 12] = [
        Builtin::K1,
        Builtin::P2,
        Builtin::P3MidRooted,
        Builtin::R3,
        Builtin::R19,
        Builtin::R20,
        Builtin::G8,
        Builtin::G11,
        Builtin::G13,
        Builtin::G14,
        Builtin::G16,
        Builtin::G17,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::K1 => "K1",
            Builtin::P2 => "P2",
            Builtin::P3MidRooted => "P3_mid_rooted",
            Builtin::R3 => "R3",
            Builtin::R19 => "R19",
            Builtin::R20 => "R20",
            Builtin::G8 => "G8",
            Builtin::G11 => "G11",
            Builtin::G13 => "G13",
            Builtin::G14 => "G14",
            Builtin::G16 => "G16",
            Builtin::G17 => "G17",
        }
    }

    /// Leaf counts along the spine for the caterpillar builtins.
    pub fn caterpillar_spec(self) -> Option<&'static [usize]> {
        Some(match self {
            Builtin::G8 => &[1, 0, 0, 0, 2],
            Builtin::G11 => &[1, 0, 1, 2, 0, 1],
            Builtin::G13 => &[1, 0, 1, 4, 0, 1],
            Builtin::G14 => &[2, 1, 0, 0, 0, 2, 2],
            Builtin::G16 => &[2, 1, 0, 1, 0, 1, 1, 0, 1],
            Builtin::G17 => &[1, 0, 0, 0, 2, 3, 1, 0, 1],
            _ => return None,
        })
    }

    /// The rooted tree. Caterpillars are rooted at their first spine vertex.
    pub fn rooted(self) -> RootedTree {
        if let Some(spec) = self.caterpillar_spec() {
            let t = caterpillar(spec).expect("builtin caterpillars are valid");
            return RootedTree::new(t, 0).expect("root 0 exists");
        }
        let (n, edges, root): (usize, &[(usize, usize)], usize) = match self {
            Builtin::K1 => (1, &[], 0),
            Builtin::P2 => (2, &[(0, 1)], 0),
            Builtin::P3MidRooted | Builtin::R3 => (3, &[(0, 1), (0, 2)], 0),
            Builtin::R19 => (19, R19_EDGES, 0),
            Builtin::R20 => (20, R20_EDGES, 0),
            _ => unreachable!("caterpillars handled above"),
        };
        let t = Tree::from_edges(n, edges).expect("builtin trees are valid");
        RootedTree::new(t, root).expect("builtin root exists")
    }
}

// R19: r=0 a=1 b=2 u=3 v=4 c=5 p1..p3=6..8 d1..d4=9..12 x=13 y=14
// e1,e2=15,16 f1,f2=17,18
const R19_EDGES: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (3, 5),
    (3, 6),
    (6, 7),
    (7, 8),
    (4, 9),
    (4, 10),
    (4, 11),
    (4, 12),
    (4, 13),
    (4, 14),
    (13, 15),
    (13, 16),
    (14, 17),
    (14, 18),
];

// R20: r=0 a=1 u=2 p=3 b=4 u1..u3=5..7 q=8 c1,c2=9,10 t=11 d1,d2=12,13
// s=14 e1,e2=15,16 z=17 f1,f2=18,19
const R20_EDGES: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (0, 3),
    (2, 4),
    (2, 5),
    (5, 6),
    (6, 7),
    (3, 8),
    (8, 9),
    (8, 10),
    (8, 11),
    (11, 12),
    (11, 13),
    (8, 14),
    (14, 15),
    (14, 16),
    (14, 17),
    (17, 18),
    (17, 19),
];

impl FromStr for Builtin {
    type Err = TreeError;
    fn from_str(s: &str) -> Result<Self, TreeError> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| TreeError::UnknownBuiltin(s.to_string()))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn builtin_tree(name: &str) -> Result<RootedTree, TreeError> {
    Ok(name.parse::<Builtin>()?.rooted())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::IntPolynomial;
    use crate::tree::independence_polynomial;

    fn poly_of(b: Builtin) -> IntPolynomial {
        independence_polynomial(b.rooted().tree())
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(builtin_tree("R19").unwrap().order(), 19);
        assert_eq!(builtin_tree("r20").unwrap().order(), 20);
        assert_eq!(
            builtin_tree("R21"),
            Err(TreeError::UnknownBuiltin("R21".into()))
        );
        assert_eq!(builtin_tree("P3_mid_rooted"), builtin_tree("R3"));
    }

    #[test]
    fn small_builtins() {
        assert_eq!(poly_of(Builtin::K1), IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(poly_of(Builtin::P2), IntPolynomial::from_i64s(&[1, 2]));
        assert_eq!(poly_of(Builtin::R3), IntPolynomial::from_i64s(&[1, 3, 1]));
    }

    #[test]
    fn r19_pinned() {
        assert_eq!(
            poly_of(Builtin::R19),
            IntPolynomial::from_i64s(&[
                1, 19, 153, 701, 2058, 4112, 5772, 5772, 4112, 2058, 701, 153, 19, 1
            ])
        );
        let deleted = independence_polynomial(&Builtin::R19.rooted().without_root());
        assert_eq!(
            deleted,
            IntPolynomial::from_i64s(&[
                1, 18, 139, 616, 1763, 3462, 4817, 4817, 3462, 1763, 616, 139, 18, 1
            ])
        );
    }

    #[test]
    fn r20_pinned() {
        assert_eq!(
            poly_of(Builtin::R20),
            IntPolynomial::from_i64s(&[
                1, 20, 171, 829, 2548, 5255, 7496, 7496, 5255, 2548, 829, 171, 20, 1
            ])
        );
        let deleted = independence_polynomial(&Builtin::R20.rooted().without_root());
        assert_eq!(
            deleted,
            IntPolynomial::from_i64s(&[
                1, 19, 155, 722, 2151, 4343, 6129, 6129, 4343, 2151, 722, 155, 19, 1
            ])
        );
    }

    #[test]
    fn caterpillars_pinned() {
        let cases: [(Builtin, &[i64]); 6] = [
            (Builtin::G8, &[1, 8, 21, 21, 8, 1]),
            (Builtin::G11, &[1, 11, 45, 88, 88, 45, 11, 1]),
            (Builtin::G13, &[1, 13, 66, 176, 279, 279, 176, 66, 13, 1]),
            (Builtin::G14, &[1, 14, 78, 226, 377, 377, 226, 78, 14, 1]),
            (
                Builtin::G16,
                &[1, 16, 105, 369, 764, 970, 764, 369, 105, 16, 1],
            ),
            (
                Builtin::G17,
                &[1, 17, 120, 465, 1101, 1676, 1676, 1101, 465, 120, 17, 1],
            ),
        ];
        for (b, expected) in cases {
            assert_eq!(poly_of(b), IntPolynomial::from_i64s(expected), "{b}");
        }
    }
}
