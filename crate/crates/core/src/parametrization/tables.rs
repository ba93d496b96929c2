//! Integer coefficient tables of the closed-form polynomials in `(b, c)`.
//! Each entry is `(coefficient, exponent of b, exponent of c)`.

use super::bivariate::Term;

/// Common denominator of the three base multisymmetric values.
pub(crate) const E_DENOMINATOR: &[Term] = &[
    (1, 2, 2), (-3, 2, 1), (2, 2, 0), (-1, 1, 2), (2, 1, 0), (1, 0, 1),
];

pub(crate) const E11_NUMERATOR: &[Term] = &[
    (1, 0, 2), (-4, 0, 1), (2, 0, 0),
];

pub(crate) const E10_NUMERATOR: &[Term] = &[
    (1, 2, 2), (-3, 2, 1), (2, 2, 0), (-1, 0, 1),
];

pub(crate) const E01_NUMERATOR: &[Term] = &[
    (1, 0, 2), (-2, 0, 1), (2, 0, 0),
];

pub(crate) const E12_NUMERATOR: &[Term] = &[
    (1, 6, 8), (-12, 6, 7), (62, 6, 6), (-180, 6, 5), (321, 6, 4), (-360, 6, 3), (248, 6, 2),
    (-96, 6, 1), (16, 6, 0), (-2, 5, 8), (18, 5, 7), (-62, 5, 6), (90, 5, 5), (-180, 5, 3),
    (248, 5, 2), (-144, 5, 1), (32, 5, 0), (1, 4, 8), (-6, 4, 7), (8, 4, 6), (18, 4, 5),
    (-57, 4, 4), (36, 4, 3), (32, 4, 2), (-48, 4, 1), (16, 4, 0), (-1, 3, 7), (7, 3, 6),
    (-14, 3, 5), (28, 3, 3), (-28, 3, 2), (8, 3, 1), (-6, 2, 5), (17, 2, 4), (-12, 2, 3),
    (2, 1, 5), (-4, 1, 3), (-1, 0, 4),
];

/// Numerator of E21 exactly as typeset (without the stray `-4c^3`).
pub(crate) const E21_NUMERATOR: &[Term] = &[
    (2, 4, 8), (-26, 4, 7), (142, 4, 6), (-426, 4, 5), (768, 4, 4), (-852, 4, 3), (568, 4, 2),
    (-208, 4, 1), (32, 4, 0), (-1, 3, 8), (14, 3, 7), (-61, 3, 6), (100, 3, 5), (-200, 3, 3),
    (244, 3, 2), (-112, 3, 1), (16, 3, 0), (-2, 2, 7), (-2, 2, 6), (52, 2, 5), (-128, 2, 4),
    (104, 2, 3), (-8, 2, 2), (-16, 2, 1), (5, 1, 6), (-16, 1, 5), (32, 1, 3), (-20, 1, 2),
    (-2, 0, 5), (8, 0, 4),
];

pub(crate) const E03_FACTOR_A: &[Term] = &[
    (1, 2, 4), (-5, 2, 3), (10, 2, 2), (-10, 2, 1), (4, 2, 0), (-1, 1, 3), (2, 1, 1), (2, 0, 2),
];

pub(crate) const E03_FACTOR_B: &[Term] = &[
    (2, 2, 4), (-12, 2, 3), (26, 2, 2), (-24, 2, 1), (8, 2, 0), (-1, 1, 4), (3, 1, 3),
    (-6, 1, 1), (4, 1, 0), (1, 0, 3), (-2, 0, 2), (2, 0, 1),
];

pub(crate) const E30_FACTOR_A: &[Term] = &[
    (1, 1, 2), (-4, 1, 1), (4, 1, 0), (2, 0, 0),
];

pub(crate) const E30_FACTOR_B: &[Term] = &[
    (2, 1, 2), (-4, 1, 1), (2, 1, 0), (-1, 0, 2),
];

pub(crate) const E02_NUMERATOR: &[Term] = &[
    (-2, 4, 4), (12, 4, 3), (-26, 4, 2), (24, 4, 1), (-8, 4, 0), (4, 3, 4), (-12, 3, 3),
    (24, 3, 1), (-16, 3, 0), (-1, 2, 4), (-8, 2, 3), (28, 2, 2), (-16, 2, 1), (-4, 2, 0),
    (4, 1, 3), (-8, 1, 1), (-2, 0, 2),
];

pub(crate) const E20_FACTOR_A: &[Term] = &[
    (1, 1, 2), (-2, 1, 0), (-2, 0, 1),
];

pub(crate) const E20_FACTOR_B: &[Term] = &[
    (2, 1, 2), (-6, 1, 1), (4, 1, 0), (-1, 0, 2), (2, 0, 0),
];

/// The quartic `b^2c^4 - 6b^2c^3 + 13b^2c^2 - 12b^2c + 4b^2 + c^2` shared by most denominators.
pub(crate) const QUARTIC: &[Term] = &[
    (1, 2, 4), (-6, 2, 3), (13, 2, 2), (-12, 2, 1), (4, 2, 0), (1, 0, 2),
];

/// The E21 denominator quartic as typeset, carrying an extra `-4c^3`.
pub(crate) const QUARTIC_E21_PRINTED: &[Term] = &[
    (1, 2, 4), (-6, 2, 3), (13, 2, 2), (-12, 2, 1), (4, 2, 0), (-4, 0, 3), (1, 0, 2),
];

pub(crate) const Q1_BRACKET: &[Term] = &[
    (2, 4, 4), (-12, 4, 3), (26, 4, 2), (-24, 4, 1), (8, 4, 0), (-6, 3, 4), (18, 3, 3),
    (-36, 3, 1), (24, 3, 0), (3, 2, 4), (8, 2, 3), (-36, 2, 2), (16, 2, 1), (12, 2, 0),
    (-6, 1, 3), (12, 1, 1), (2, 0, 2),
];

pub(crate) const Q2_BRACKET: &[Term] = &[
    (6, 4, 4), (-36, 4, 3), (78, 4, 2), (-72, 4, 1), (24, 4, 0), (-12, 3, 4), (36, 3, 3),
    (-72, 3, 1), (48, 3, 0), (5, 2, 4), (16, 2, 3), (-68, 2, 2), (32, 2, 1), (20, 2, 0),
    (-12, 1, 3), (24, 1, 1), (6, 0, 2),
];

/// Shared by P1 and the squared bracket of D1.
pub(crate) const P1_BRACKET: &[Term] = &[
    (4, 8, 10), (-60, 8, 9), (400, 8, 8), (-1560, 8, 7), (3940, 8, 6), (-6732, 8, 5),
    (7880, 8, 4), (-6240, 8, 3), (3200, 8, 2), (-960, 8, 1), (128, 8, 0), (-18, 7, 10),
    (216, 7, 9), (-1080, 7, 8), (2808, 7, 7), (-3546, 7, 6), (7092, 7, 4), (-11232, 7, 3),
    (8640, 7, 2), (-3456, 7, 1), (576, 7, 0), (9, 6, 10), (51, 6, 9), (-1319, 6, 8),
    (7905, 6, 7), (-24186, 6, 6), (43740, 6, 5), (-48372, 6, 4), (31620, 6, 3), (-10552, 6, 2),
    (816, 6, 1), (288, 6, 0), (-162, 5, 9), (1494, 5, 8), (-5238, 5, 7), (7686, 5, 6),
    (-15372, 5, 4), (20952, 5, 3), (-11952, 5, 2), (2592, 5, 1), (45, 4, 9), (-231, 4, 8),
    (-300, 4, 7), (3906, 4, 6), (-8904, 4, 5), (7812, 4, 4), (-1200, 4, 3), (-1848, 4, 2),
    (720, 4, 1), (-36, 3, 8), (378, 3, 7), (-882, 3, 6), (1764, 3, 4), (-1512, 3, 3),
    (288, 3, 2), (-13, 2, 7), (-108, 2, 6), (380, 2, 5), (-216, 2, 4), (-52, 2, 3), (18, 1, 6),
    (-36, 1, 4), (-4, 0, 5),
];

/// Shared by P2 and the squared bracket of D2.
pub(crate) const P2_BRACKET: &[Term] = &[
    (36, 6, 10), (-504, 6, 9), (3168, 6, 8), (-11808, 6, 7), (28980, 6, 6), (-49032, 6, 5),
    (57960, 6, 4), (-47232, 6, 3), (25344, 6, 2), (-8064, 6, 1), (1152, 6, 0), (-45, 5, 10),
    (441, 5, 9), (-1809, 5, 8), (3951, 5, 7), (-4410, 5, 6), (8820, 5, 4), (-15804, 5, 3),
    (14472, 5, 2), (-7056, 5, 1), (1440, 5, 0), (14, 4, 10), (-6, 4, 9), (-322, 4, 8),
    (758, 4, 7), (404, 4, 6), (-2464, 4, 5), (808, 4, 4), (3032, 4, 3), (-2576, 4, 2),
    (-96, 4, 1), (448, 4, 0), (-45, 3, 9), (-9, 3, 8), (1044, 3, 7), (-2394, 3, 6),
    (4788, 3, 4), (-4176, 3, 3), (72, 3, 2), (720, 3, 1), (104, 2, 8), (-210, 2, 7),
    (-720, 2, 6), (2288, 2, 5), (-1440, 2, 4), (-840, 2, 3), (832, 2, 2), (-99, 1, 7),
    (252, 1, 6), (-504, 1, 4), (396, 1, 3), (36, 0, 6), (-72, 0, 5), (72, 0, 4),
];
