//! Reference data transcribed from the published worked examples.

/// `{0, 8, 12, 14, 15, 16, 20 →}`.
pub const EX_ORDER: &str = "elem:0,8,12,14,15,16;c=20";

/// Printed invariants of [`EX_ORDER`]: `(e, d', c', d, c, ℓ, s̃)`.
pub const EX_ORDER_PROFILE: (u32, u32, u32, u32, u32, u32, u32) = (8, 12, 14, 16, 20, 3, 14);

/// `(s, ν(s), (#A, #B, #C, #D))` on [`EX_ORDER`].
pub const EX_ORDER_NU: [(u32, u64, [u64; 4]); 2] = [(30, 7, [0, 3, 0, 4]), (20, 4, [0, 0, 2, 2])];

/// The four `s_m` examples: `(case, spec, s_m)`.
pub const SM_EXAMPLES: [(u8, &str, u32); 4] = [
    (1, "elem:0,25,26,28,30,31,33;c=39", 61),
    (2, "elem:0,7,13,14,15,16,17;c=20", 31),
    (3, "elem:0,20,21,26,27,32;c=39", 54),
    (4, "elem:0,10,20,22,23,26;c=30", 46),
];

pub const BUCHWEITZ: &str = "gen:13,14,15,16,17,18,20,22,23";

pub const EX_CURVE: &str = "gen:4,9,11";

/// Binomials of `⟨4, 9, 11⟩` in `x0, x1, x2`.
pub const EX_CURVE_EQUATIONS: [&str; 3] = ["x0^5 - x1*x2", "x0*x1^2 - x2^2", "-x1^3 + x0^4*x2"];

pub const EX_CURVE_J1: [[i64; 3]; 3] = [[5, -1, -1], [1, 2, -2], [4, -3, 1]];

/// `(total, negative, generator degrees)`.
pub const EX_CURVE_T1: (usize, usize, [i64; 3]) = (17, 15, [-18, -16, -11]);

/// One row of the printed `T¹` table of the Buchweitz curve.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub ell: i64,
    pub g: &'static [usize],
    pub h: &'static [u64],
    pub rho: usize,
    pub dim: usize,
}

const fn row(ell: i64, g: &'static [usize], h: &'static [u64], rho: usize, dim: usize) -> TableRow {
    TableRow { ell, g, h, rho, dim }
}

/// The printed rows, plus `ℓ = 0` where `G_0 = ∅`.
pub const BUCHWEITZ_TABLE: [TableRow; 30] = [
    row(-23, &[0, 1, 2, 3, 4, 5, 6, 7], &[28, 29, 30, 31, 32, 33, 34, 35, 42, 44], 7, 0),
    row(-22, &[0, 1, 2, 3, 4, 5, 6, 8], &[28, 29, 30, 31, 32, 33, 34, 41, 43, 46], 7, 0),
    row(-21, &[0, 1, 2, 3, 4, 5, 6, 7, 8], &[28, 29, 30, 31, 32, 33, 40, 42, 45, 46], 8, 0),
    row(-20, &[0, 1, 2, 3, 4, 5, 7, 8], &[28, 29, 30, 31, 32, 39, 41, 44, 45], 8, 0),
    row(-19, &[0, 1, 2, 3, 4, 5, 6, 7, 8], &[28, 29, 30, 31, 38, 40, 43, 44], 8, 0),
    row(-18, &[0, 1, 2, 3, 4, 6, 7, 8], &[28, 29, 30, 37, 39, 42, 43], 8, 0),
    row(-17, &[0, 1, 2, 3, 5, 6, 7, 8], &[28, 29, 36, 38, 41, 42], 7, 0),
    row(-16, &[0, 1, 2, 5, 6, 7, 8], &[28, 35, 37, 40, 41], 7, 0),
    row(-15, &[0, 1, 3, 4, 5, 6, 7, 8], &[34, 36, 39, 40], 7, 0),
    row(-14, &[0, 2, 3, 4, 5, 6, 7, 8], &[33, 35, 38, 39], 7, 0),
    row(-13, &[1, 2, 3, 4, 5, 6, 7, 8], &[32, 34, 37, 38], 7, 0),
    row(-12, &[0, 1, 2, 3, 4, 5, 6, 7, 8], &[31, 33, 36, 37], 7, 1),
    row(-11, &[0, 1, 2, 3, 4, 5, 6, 7, 8], &[30, 32, 35, 36], 7, 1),
    row(-10, &[0, 1, 2, 3, 4, 5, 6, 7], &[29, 31, 34, 35], 6, 1),
    row(-9, &[0, 1, 2, 3, 4, 5, 6], &[28, 30, 33, 34], 5, 1),
    row(-8, &[0, 1, 2, 3, 4, 5, 6], &[29, 32, 33], 5, 1),
    row(-7, &[0, 1, 2, 3, 4, 5], &[28, 31, 32], 4, 1),
    row(-6, &[0, 1, 2, 3, 4, 5], &[30, 31], 4, 1),
    row(-5, &[0, 1, 2, 3, 4], &[29, 30], 3, 1),
    row(-4, &[0, 1, 2, 3, 8], &[28, 29], 2, 2),
    row(-3, &[0, 1, 2, 7], &[28], 1, 2),
    row(-2, &[0, 1, 8], &[], 0, 2),
    row(-1, &[0, 6, 7], &[], 0, 2),
    row(0, &[], &[], 0, 0),
    row(1, &[5, 6], &[], 0, 1),
    row(2, &[4], &[], 0, 0),
    row(3, &[3, 5], &[], 0, 1),
    row(4, &[2, 4], &[], 0, 1),
    row(5, &[1, 3], &[], 0, 1),
    row(6, &[0, 2], &[], 0, 1),
];

pub const BUCHWEITZ_TOTAL: usize = 21;

/// Basis of `T¹(−12)`.
pub const BUCHWEITZ_BASIS_12: [i64; 9] = [0, 1, 2, 3, 4, 5, 7, 9, 10];

/// Arithmetic sequences used by the smoothness scans: `b = 2, 1, 0`.
pub const SCAN_PANEL: [&str; 3] = ["gen:5,8,11,14", "gen:7,10,13,16", "gen:6,7,8,9"];

/// `b = 2`, `v = 3`: the one-parameter family singular at the origin.
pub const SINGULAR_ORIGIN: &str = "gen:8,11,14,17";
