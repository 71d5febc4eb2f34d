//! Reference tables transcribed verbatim, written as expressions in the
//! symbols a, b, c. A listing `O(...)` without a subscript is read as a
//! W_e-orbit, since only that reading conserves the point count.

use super::{Closure, Vars};

/// One orbit listing: the representative and the listed points.
pub struct OrbitListing {
    pub system: &'static str,
    pub rep: &'static str,
    pub points: &'static str,
    pub closure: Closure,
}

const fn listing(system: &'static str, rep: &'static str, points: &'static str, closure: Closure) -> OrbitListing {
    OrbitListing { system, rep, points, closure }
}

use Closure::{Contragredient, Listed, PlusMinus};

pub const ORBIT_LISTINGS: &[OrbitListing] = &[
    listing("A2", "a b", "a b, -a-b a, b -a-b", Listed),
    listing("A2", "-a a+b", "-a a+b, a+b -b, -b -a", Listed),
    listing("A2", "a 0", "a 0, -a a, 0 -a", Listed),
    listing("A2", "0 b", "0 b, b -b, -b 0", Listed),
    listing("C2", "a b", "a b, a+2b -a-b, -a -b, -a-2b a+b", Listed),
    listing("C2", "-a a+b", "-a a+b, a+2b -b, a -a-b, -a-2b b", Listed),
    listing("C2", "a 0", "a 0, -a a", PlusMinus),
    listing("C2", "0 b", "0 b, 2b -b", PlusMinus),
    listing("G2", "a b", "a b, 2a+b -3a-b, -a-b 3a+2b", PlusMinus),
    listing("G2", "-a 3a+b", "-a 3a+b, a+b -b, -2a-b 3a+2b", PlusMinus),
    listing("G2", "a 0", "a 0, -a 3a, 2a -3a", PlusMinus),
    listing("G2", "0 b", "0 b, b -b, -b 2b", PlusMinus),
    listing("A3", "a b c", "a b c, a+b c -b-c, a+b+c -b-c b, -a a+b+c -c, b -a-b a+b+c, -a-b a b+c", Contragredient),
    listing(
        "A3",
        "a+b -b b+c",
        "a+b -b b+c, a b+c -c, a+b+c -c -b, -a a+b c, b+c -a-b-c a+b, -b -a a+b+c",
        Contragredient,
    ),
    listing("A3", "a b 0", "a b 0, a+b -b b, a+b 0 -b, -a a+b 0, -a-b a b, b -a-b a+b", Contragredient),
    listing("A3", "a 0 c", "a 0 c, a c -c, a+c -c 0, -a a c, 0 -a a+c, -a a+c -c", Contragredient),
    listing("A3", "0 b c", "0 b c, b -b b+c, 0 b+c -c, b+c -b-c b, -b 0 b+c, b c -b-c", Contragredient),
    listing("A3", "a 0 0", "a 0 0, -a a 0, 0 0 -a, 0 -a a", Listed),
    listing("A3", "0 b 0", "0 b 0, b -b b, b 0 -b, -b b -b, 0 -b 0, -b 0 b", Listed),
    listing("A3", "0 0 c", "0 0 c, 0 c -c, c -c 0, -c 0 0", Listed),
    listing(
        "B3",
        "a b c",
        "a b c, b -a-b 2a+2b+c, -a-b a 2b+c, a+b+c -b-c 2b+c, -a a+b+c -c, -b-c -a 2a+2b+c, \
         -a-b-c -b 2b+c, a+2b+c -a-b-c c, -b a+2b+c -2a-2b-c, -a-2b-c b+c -c, b+c a+b -2a-2b-c, \
         a+b -a-2b-c 2b+c",
        PlusMinus,
    ),
    listing(
        "B3",
        "a+b -b 2b+c",
        "a+b -b 2b+c, -a a+b c, -b -a 2a+2b+c, a b+c -c, b+c -a-b-c 2a+2b+c, -a-b-c a 2b+c, \
         -a-2b-c b c, b a+b+c -2a-2b-c, a+b+c -a-2b-c 2b+c, -a-b -b-c 2b+c, a+2b+c -a-b -c, \
         -b-c a+2b+c -2a-2b-c",
        PlusMinus,
    ),
    listing(
        "B3",
        "a b 0",
        "a b 0, a+b -b 2b, -a a+b 0, b -a-b 2a+2b, -a-b a 2b, -b -a 2a+2b, -a-2b b 0, -a-b -b 2b, \
         a+2b -a-b 0, b a+b -2a-2b, a+b -a-2b 2b, -b a+2b -2a-2b",
        PlusMinus,
    ),
    listing(
        "B3",
        "a 0 c",
        "a 0 c, -a a c, 0 -a 2a+c, a c -c, a+c -c c, -a a+c -c, c -a-c 2a+c, -a-c a c, -c -a 2a+c, \
         -a-c 0 c, a+c -a-c c, 0 a+c -2a-c",
        PlusMinus,
    ),
    listing(
        "B3",
        "0 b c",
        "0 b c, b -b 2b+c, -b 0 2b+c, 0 b+c -c, b+c -b-c 2b+c, -b-c 0 2b+c, -2b-c b c, \
         -b-c -b 2b+c, 2b+c -b-c c, b b+c -2b-c, b+c -2b-c 2b+c, -b 2b+c -2b-c",
        PlusMinus,
    ),
    listing("B3", "a 0 0", "a 0 0, a -a 0, 0 a -2a", PlusMinus),
    listing("B3", "0 b 0", "0 b 0, b -b 2b, -b 0 2b, -2b b 0, -b -b 2b, b -2b 2b", PlusMinus),
    listing("B3", "0 0 c", "0 0 c, c -c c, 0 c -c, -c 0 c", PlusMinus),
    listing(
        "C3",
        "a b c",
        "a b c, b -a-b a+b+c, -a-b a b+c, a+b+2c -b-2c b+c, -a a+b+2c -c, -b-2c -a a+b+c, \
         -a-b-2c -b b+c, a+2b+2c -a-b-2c c, -b a+2b+2c -a-b-c, -a-2b-2c b+2c -c, b+2c a+b -a-b-c, \
         a+b -a-2b-2c b+c",
        PlusMinus,
    ),
    listing(
        "C3",
        "a+b -b b+c",
        "a+b -b b+c, -a a+b c, -b -a a+b+c, a b+2c -c, b+2c -a-b-2c a+b+c, -a-b-2c a b+c, \
         -a-2b-2c b c, b a+b+2c -a-b-c, a+b+2c -a-2b-2c b+c, -a-b -b-2c b+c, a+2b+2c -a-b -c, \
         -b-2c a+2b+2c -a-b-c",
        PlusMinus,
    ),
    listing(
        "C3",
        "a b 0",
        "a b 0, a+b -b b, -a a+b 0, b -a-b a+b, -a-b a b, -b -a a+b, -a-2b b 0, -a-b -b b, \
         a+2b -a-b 0, b a+b -a-b, a+b -a-2b b, -b a+2b -a-b",
        PlusMinus,
    ),
    listing(
        "C3",
        "a 0 c",
        "a 0 c, -a a c, 0 -a a+c, a 2c -c, a+2c -2c c, a+2c -a-2c c, 0 a+2c -a-c, -a a+2c -c, \
         2c -a-2c a+c, -a-2c a c, -2c -a a+c, -a-2c 0 c",
        PlusMinus,
    ),
    listing(
        "C3",
        "0 b c",
        "0 b c, b -b b+c, -b 0 b+c, 0 b+2c -c, b+2c -b-2c b+c, -b-2c 0 b+c, -2b-2c b c, \
         -b-2c -b b+c, 2b+2c -b-2c c, b b+2c -b-c, b+2c -2b-2c b+c, -b 2b+2c -b-c",
        PlusMinus,
    ),
    listing("C3", "a 0 0", "a 0 0, a -a 0, 0 a -a", PlusMinus),
    listing("C3", "0 b 0", "0 b 0, b -b b, b 0 -b, 2b -b 0, -b -b b, b -2b b", PlusMinus),
    listing("C3", "0 0 c", "0 0 c, 0 2c -c, 2c -2c c, 2c 0 -c", PlusMinus),
];

/// One product line O_e(λ) ⊗ O_e(μ) = ⋃ k·O_e(ν) valid under a condition.
pub struct ProductLine {
    pub system: &'static str,
    pub lhs: [&'static str; 2],
    pub rhs: &'static [(u64, &'static str)],
    /// Number of symbols the line depends on (a; a, b; or a, b, c).
    pub vars: usize,
    /// Condition text as tabulated, for reporting.
    pub condition: &'static str,
    /// The condition, together with the standing assumptions of its block.
    pub holds: fn(&Vars) -> bool,
}

const fn line(
    system: &'static str,
    lhs: [&'static str; 2],
    rhs: &'static [(u64, &'static str)],
    vars: usize,
    condition: &'static str,
    holds: fn(&Vars) -> bool,
) -> ProductLine {
    ProductLine { system, lhs, rhs, vars, condition, holds }
}

pub const PRODUCT_LINES: &[ProductLine] = &[
    // A2, (a b) with a ≠ b.
    line("A2", ["a b", "c 0"], &[(1, "a+c b"), (1, "a-c b+c"), (1, "-a-b+c a")], 3, "a>c>b", |v| {
        v[0] != v[1] && v[0] > v[2] && v[2] > v[1]
    }),
    line("A2", ["a b", "c 0"], &[(1, "a+c b"), (1, "a-c b+c"), (1, "a b-c")], 3, "a>c, b>c", |v| {
        v[0] != v[1] && v[0] > v[2] && v[1] > v[2]
    }),
    line("A2", ["a b", "c 0"], &[(1, "a+c b"), (1, "-a-b+c a"), (1, "0 a+b")], 3, "a=c>b", |v| {
        v[0] != v[1] && v[0] == v[2] && v[2] > v[1]
    }),
    line("A2", ["a b", "c 0"], &[(1, "a+c b"), (1, "a b-c"), (1, "0 a+b")], 3, "b>a=c", |v| {
        v[0] != v[1] && v[1] > v[0] && v[0] == v[2]
    }),
    line("A2", ["a b", "c 0"], &[(1, "a+c b"), (1, "a-c b+c"), (1, "a 0")], 3, "a<b=c", |v| {
        v[0] != v[1] && v[0] < v[1] && v[1] == v[2]
    }),
    line("A2", ["a b", "c 0"], &[(1, "a+c b"), (1, "a-c b+c"), (1, "c-a-b a")], 3, "c>a+b", |v| {
        v[0] != v[1] && v[2] > v[0] + v[1]
    }),
    line("A2", ["a b", "c 0"], &[(1, "a+c b"), (1, "a-c b+c"), (1, "-a-b+c b")], 3, "a+b>c>b", |v| {
        v[0] != v[1] && v[0] + v[1] > v[2] && v[2] > v[1]
    }),
    line("A2", ["a b", "c 0"], &[(1, "a+c b"), (1, "a-c b+c"), (1, "a b-c")], 3, "a+b>b>c", |v| {
        v[0] != v[1] && v[1] > v[2]
    }),
    // A2, (−a a+b) with a ≠ b.
    line("A2", ["-a a+b", "c 0"], &[(1, "-a-c a+b+c"), (1, "c-a a+b"), (1, "a+b-c c-b")], 3, "a>c>b", |v| {
        v[0] != v[1] && v[0] > v[2] && v[2] > v[1]
    }),
    line("A2", ["-a a+b", "c 0"], &[(1, "-a-c a+b+c"), (1, "c-a a+b"), (1, "-a a+b-c")], 3, "a>c, b>c", |v| {
        v[0] != v[1] && v[0] > v[2] && v[1] > v[2]
    }),
    line("A2", ["-a a+b", "c 0"], &[(1, "-a-c a+b+c"), (1, "a+b-c c-b"), (1, "0 a+b")], 3, "a=c>b", |v| {
        v[0] != v[1] && v[0] == v[2] && v[2] > v[1]
    }),
    line("A2", ["-a a+b", "c 0"], &[(1, "-a-c a+b+c"), (1, "-a a+b-c"), (1, "0 a+b")], 3, "b>a=c", |v| {
        v[0] != v[1] && v[1] > v[0] && v[0] == v[2]
    }),
    line("A2", ["-a a+b", "c 0"], &[(1, "-a-c a+b+c"), (1, "c-a a+b"), (1, "a 0")], 3, "a<b=c", |v| {
        v[0] != v[1] && v[0] < v[1] && v[1] == v[2]
    }),
    line("A2", ["-a a+b", "c 0"], &[(1, "-a-c a+b+c"), (1, "c-a a+b"), (1, "a+b-c c-b")], 3, "c>a+b", |v| {
        v[0] != v[1] && v[2] > v[0] + v[1]
    }),
    line("A2", ["-a a+b", "c 0"], &[(1, "-a-c a+b+c"), (1, "c-a a+b"), (1, "a+b-c c-a")], 3, "a+b>c>b", |v| {
        v[0] != v[1] && v[0] + v[1] > v[2] && v[2] > v[1]
    }),
    line("A2", ["-a a+b", "c 0"], &[(1, "-a-c a+b+c"), (1, "c-a a+b"), (1, "-a a+b-c")], 3, "a+b>b>c", |v| {
        v[0] != v[1] && v[1] > v[2]
    }),
    // A2, (a a) and (−a 2a).
    line("A2", ["a a", "c 0"], &[(1, "a+c a"), (1, "c-2a a"), (1, "a-c a+c")], 3, "c>2a", |v| {
        v[0] == v[1] && v[2] > 2 * v[0]
    }),
    line("A2", ["a a", "c 0"], &[(1, "a+c a"), (1, "c-2a a"), (1, "a-c a+c")], 3, "2a>c>a", |v| {
        v[0] == v[1] && 2 * v[0] > v[2] && v[2] > v[0]
    }),
    line("A2", ["a a", "c 0"], &[(1, "a+c a"), (1, "a-c a+c"), (1, "a a-c")], 3, "a>c", |v| {
        v[0] == v[1] && v[0] > v[2]
    }),
    line("A2", ["-a 2a", "c 0"], &[(1, "-a-c 2a+c"), (1, "2a-c c-a"), (1, "c-a 2a")], 3, "c>2a", |v| {
        v[0] == v[1] && v[2] > 2 * v[0]
    }),
    line("A2", ["-a 2a", "c 0"], &[(1, "-a-c 2a+c"), (1, "2a-c c-a"), (1, "c-a 2a")], 3, "2a>c>a", |v| {
        v[0] == v[1] && 2 * v[0] > v[2] && v[2] > v[0]
    }),
    line("A2", ["-a 2a", "c 0"], &[(1, "-a-c 2a+c"), (1, "c-a 2a"), (1, "-a 2a-c")], 3, "a>c", |v| {
        v[0] == v[1] && v[0] > v[2]
    }),
    // A2, products of orbits on walls.
    line("A2", ["a 0", "b 0"], &[(1, "a+b 0"), (1, "-a+b a"), (1, "a-b b")], 2, "a<b", |v| v[0] < v[1]),
    line("A2", ["a 0", "a 0"], &[(1, "2a 0"), (2, "0 a")], 1, "", |_| true),
    line("A2", ["a 0", "0 b"], &[(1, "a b"), (1, "-a a+b"), (1, "0 -a+b")], 2, "a<b", |v| v[0] < v[1]),
    line("A2", ["a 0", "0 a"], &[(1, "a a"), (1, "-a 2a"), (3, "0 0")], 1, "", |_| true),
    // C2, (a b).
    line(
        "C2",
        ["a b", "c 0"],
        &[(1, "a+c b"), (1, "a+2b-c -a-b+c"), (1, "a-c b+c"), (1, "c-2b-a a+b")],
        3,
        "a+b-c<b",
        |v| v[0] + v[1] - v[2] < v[1],
    ),
    line(
        "C2",
        ["a b", "c 0"],
        &[(1, "a+c b"), (1, "a+2b-c c-a-b"), (1, "a-c b+c"), (1, "c-a-2b a+b")],
        3,
        "b>c-a-b, a>c",
        |v| v[1] > v[2] - v[0] - v[1] && v[0] > v[2],
    ),
    line(
        "C2",
        ["a b", "c 0"],
        &[(1, "a+c b"), (1, "a+2b-c c-a-b"), (1, "a-c b+c"), (1, "c-a-2b a+b")],
        3,
        "b>c-a-b, c>a",
        |v| v[1] > v[2] - v[0] - v[1] && v[2] > v[0],
    ),
    line("C2", ["a b", "c 0"], &[(1, "a+c b"), (1, "a-c b"), (1, "a-c b+c"), (1, "c-a-2b a+b")], 3, "a+b>b+c", |v| {
        v[0] + v[1] > v[1] + v[2]
    }),
    line(
        "C2",
        ["a b", "c 0"],
        &[(1, "a+c b"), (1, "a-c b"), (1, "a-c b+c"), (1, "c-a-2b a+b")],
        3,
        "b+c>a+b>c-b",
        |v| v[1] + v[2] > v[0] + v[1] && v[0] + v[1] > v[2] - v[1],
    ),
    line("C2", ["a b", "c 0"], &[(1, "a+c b"), (1, "a-c b"), (1, "a-c b+c"), (1, "c-a-2b a+b")], 3, "a+b<c-b", |v| {
        v[0] + v[1] < v[2] - v[1]
    }),
    // C2, (−a a+b).
    line(
        "C2",
        ["-a a+b", "c 0"],
        &[(1, "-a-c a+b+c"), (1, "-a-2b+c b"), (1, "c-a a+b"), (1, "a+2b-c b+c")],
        3,
        "a+b-c<b",
        |v| v[0] + v[1] - v[2] < v[1],
    ),
    line(
        "C2",
        ["-a a+b", "c 0"],
        &[(1, "-a-c a+b+c"), (1, "c-a-2b b"), (1, "c-a a+b"), (1, "a+2b-c c-b")],
        3,
        "b>c-a-b, a>c",
        |v| v[1] > v[2] - v[0] - v[1] && v[0] > v[2],
    ),
    line(
        "C2",
        ["-a a+b", "c 0"],
        &[(1, "-a-c a+b+c"), (1, "c-a-2b b"), (1, "c-a a+b"), (1, "a+2b-c c-b")],
        3,
        "b>c-a-b, c>a",
        |v| v[1] > v[2] - v[0] - v[1] && v[2] > v[0],
    ),
    line(
        "C2",
        ["-a a+b", "c 0"],
        &[(1, "-a-c a+b+c"), (1, "c-a a+b-c"), (1, "c-a a+b"), (1, "a+2b-c c-b")],
        3,
        "a+b>b+c",
        |v| v[0] + v[1] > v[1] + v[2],
    ),
    line(
        "C2",
        ["-a a+b", "c 0"],
        &[(1, "-a-c a+b+c"), (1, "c-a a+b-c"), (1, "c-a a+b"), (1, "a+2b-c c-b")],
        3,
        "b+c>a+b>c-b",
        |v| v[1] + v[2] > v[0] + v[1] && v[0] + v[1] > v[2] - v[1],
    ),
    line(
        "C2",
        ["-a a+b", "c 0"],
        &[(1, "-a-c a+b+c"), (1, "c-a a+b-c"), (1, "c-a a+b"), (1, "a+2b-c c-b")],
        3,
        "a+b<c-b",
        |v| v[0] + v[1] < v[2] - v[1],
    ),
    // C2, products of orbits on walls.
    line("C2", ["a 0", "b 0"], &[(1, "a+b 0"), (1, "a-b 0"), (1, "a-b b"), (1, "b-a a")], 2, "a>b", |v| v[0] > v[1]),
    line("C2", ["a 0", "a 0"], &[(1, "2a 0"), (2, "0 2a"), (4, "0 0")], 1, "", |_| true),
    line("C2", ["0 a", "0 b"], &[(1, "0 a+b"), (1, "2b a-b"), (1, "-2b a+b"), (1, "0 a-b")], 2, "a>b", |v| v[0] > v[1]),
    line("C2", ["0 a", "0 a"], &[(1, "0 2a"), (2, "2a 0"), (4, "0 0")], 1, "", |_| true),
    line("C2", ["a 0", "0 b"], &[(1, "a b"), (1, "-a a+b"), (1, "a-2b b"), (1, "2b-a a-b")], 2, "a>2b", |v| {
        v[0] > 2 * v[1]
    }),
    line("C2", ["a 0", "0 b"], &[(1, "a b"), (1, "-a a+b"), (1, "2b-a a-b"), (1, "a-2b b")], 2, "2b>a>b", |v| {
        2 * v[1] > v[0] && v[0] > v[1]
    }),
    line("C2", ["a 0", "0 b"], &[(1, "a b"), (1, "-a a+b"), (1, "a b-a"), (1, "-a b")], 2, "b>a", |v| v[1] > v[0]),
    line("C2", ["a 0", "0 a"], &[(1, "a a"), (1, "-a 2a"), (2, "a 0")], 1, "", |_| true),
    line("C2", ["a 0", "0 2a"], &[(1, "a 2a"), (1, "-a 3a"), (1, "a a"), (1, "-a 2a")], 1, "", |_| true),
    line("C2", ["2a 0", "0 a"], &[(1, "2a a"), (1, "-2a 3a"), (2, "0 a")], 1, "", |_| true),
    // G2.
    line(
        "G2",
        ["a 0", "b 0"],
        &[(1, "a+b 0"), (1, "b-a 3a"), (1, "2a+b -3a"), (1, "2a-b 3b-3a"), (1, "b-a 3a-3b"), (1, "b-a 0")],
        2,
        "a<b<2a",
        |v| v[0] < v[1] && v[1] < 2 * v[0],
    ),
    line(
        "G2",
        ["a 0", "b 0"],
        &[(1, "a+b 0"), (1, "b-a 3a"), (1, "2a+b -3a"), (1, "b-2a 3a"), (1, "a+a -3a"), (1, "b-a 0")],
        2,
        "b>2a",
        |v| v[1] > 2 * v[0],
    ),
    line("G2", ["a 0", "a 0"], &[(1, "2a 0"), (2, "0 3a"), (2, "a 0"), (6, "0 0")], 1, "", |_| true),
    line("G2", ["a 0", "2a 0"], &[(1, "3a 0"), (1, "a 0"), (1, "a 3a"), (1, "4a -3a"), (2, "0 3a")], 1, "", |_| true),
    line(
        "G2",
        ["0 a", "0 b"],
        &[(1, "0 a+b"), (1, "a b-a"), (1, "b a-b"), (1, "b-a 2a-b"), (1, "a b-2a"), (1, "0 b-a")],
        2,
        "a<b<2a",
        |v| v[0] < v[1] && v[1] < 2 * v[0],
    ),
    line(
        "G2",
        ["0 a", "0 b"],
        &[(1, "0 a+b"), (1, "0 b-a"), (1, "a b-a"), (1, "b a-b"), (1, "a b-2a"), (1, "b-a 2a-b")],
        2,
        "b>2a",
        |v| v[1] > 2 * v[0],
    ),
    line("G2", ["0 a", "0 a"], &[(1, "0 2a"), (2, "a 0"), (2, "0 a"), (6, "0 0")], 1, "", |_| true),
    line("G2", ["0 a", "0 2a"], &[(1, "0 3a"), (2, "a 0"), (1, "a a"), (1, "2a -a"), (1, "0 a")], 1, "", |_| true),
];
