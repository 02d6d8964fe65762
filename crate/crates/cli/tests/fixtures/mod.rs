//! Benchmark fixture tables: the published reference grids for the
//! parameter set F1=112.22, F2=103.05, sigma1=0.1, sigma2=0.15 (0.9 for the
//! wide table), r=0.05, T=1, strikes {-20,-10,0,5,15,25} by correlations
//! {-0.99,-0.5,0,0.3,0.8,0.99}.
//!
//! Caveat discovered while validating this harness: the published grids
//! embed a common per-cell sampling error. Evidence, reproducible with this
//! crate's own oracles:
//!
//! - the (K=0, rho=-0.99) cell prints 15.1332, but the largest value any
//!   correlation can produce with these parameters is the rho=-1 exchange
//!   value 15.1299 — nothing correct can print 15.1332;
//! - the two independently-labelled rows of the eight-decimal grid agree to
//!   ~1e-7 across the board, which 100k-path sampling cannot do; they are
//!   one realization, copied (with a few visible digit slips, see
//!   [`TABLE1_TYPO_CELLS`]);
//! - the offsets of the printed closed-form rows from their exact values
//!   match the offsets of the sampled row cell by cell (e.g. +0.0035,
//!   +0.0035, +0.0036, +0.0038, +0.0042, +0.0051 along K=5), so every row
//!   shares one noise realization of up to 2.7e-2.
//!
//! Error statistics computed *within* a table cancel the shared noise and
//! do reproduce: this library's Table-2 mean relative error for the
//! Bjerksund-Stensland row is 0.000512 against the published 0.000522, and
//! its Table-3 extended-formula statistic is 1.5e-5 against the published
//! 1.7e-5. Absolute cell comparisons tighter than the noise cannot pass for
//! any faithful implementation; the acceptance tests that demand them
//! document this and fail honestly.

pub const STRIKES: [f64; 6] = [-20.0, -10.0, 0.0, 5.0, 15.0, 25.0];
pub const RHOS: [f64; 6] = [-0.99, -0.5, 0.0, 0.3, 0.8, 0.99];

/// Eight-decimal grid, sampled row ("100000 paths").
pub const TABLE1_MC: [[f64; 6]; 6] = [
    [29.64274378, 28.99479250, 28.38110019, 28.07014138, 27.7700518, 27.75380043],
    [21.84990851, 20.90504376, 19.88891999, 19.27012445, 18.38114096, 18.24534835],
    [15.13321639, 13.9180430, 12.52373725, 11.56183922, 9.63252498, 8.82120140],
    [12.22000018, 10.95620431, 9.44533360, 8.36741249, 5.96702485, 4.54620032],
    [7.49782906, 6.24223330, 4.7444690, 3.67981792, 1.3424512, 0.10249913],
    [4.18077521, 3.13000435, 1.96209910, 1.21996422, 0.10413210, 0.00000000],
];

/// Eight-decimal grid, discretized-pricer row.
pub const TABLE1_DISC: [[f64; 6]; 6] = [
    [29.64274375, 28.99479248, 28.38110018, 28.07014139, 27.770518, 27.75380040],
    [21.84990830, 20.90504291, 19.88892000, 19.27012446, 18.38114087, 18.24534802],
    [15.13321639, 13.91800429, 12.52373725, 11.56183922, 9.63252501, 8.82120141],
    [12.22000016, 10.95620391, 9.44533361, 8.36741249, 5.96702488, 4.54620020],
    [7.49782906, 6.24223324, 4.7444681, 3.67981791, 1.3424516, 0.10249892],
    [4.1807518, 3.13000410, 1.96209915, 1.21996421, 0.10413200, 0.00000000],
];

/// Cells where the two printed rows of the eight-decimal grid disagree
/// beyond eight-decimal rounding (1e-7): visible transcription slips.
pub const TABLE1_TYPO_CELLS: [(usize, usize); 11] = [
    (0, 4),
    (1, 0),
    (1, 1),
    (2, 1),
    (3, 1),
    (3, 5),
    (4, 2),
    (4, 4),
    (4, 5),
    (5, 0),
    (5, 4),
];

/// Four-decimal benchmark grid at base volatilities:
/// [reference, kirk, bjerksund-stensland, extended] per strike row.
pub const TABLE2: [[[f64; 6]; 4]; 6] = [
    [
        [29.6427, 28.9948, 28.3811, 28.0701, 27.7701, 27.7538],
        [29.6616, 29.0056, 28.3848, 28.0709, 27.7704, 27.7539],
        [29.6427, 28.9948, 28.3811, 28.0701, 27.7701, 27.7538],
        [29.6427, 28.9948, 28.3811, 28.0701, 27.7701, 27.7538],
    ],
    [
        [21.8499, 20.9050, 19.8889, 19.2701, 18.3811, 18.2453],
        [21.8600, 20.9114, 19.8917, 19.2710, 18.3816, 18.2460],
        [21.8499, 20.9049, 19.8888, 19.2701, 18.3811, 18.2453],
        [21.8499, 20.9049, 19.8888, 19.2701, 18.3811, 18.2453],
    ],
    [
        [15.1332, 13.9180, 12.5237, 11.5618, 9.6325, 8.8212],
        [15.1332, 13.9180, 12.5237, 11.5618, 9.6325, 8.8212],
        [15.1332, 13.9180, 12.5237, 11.5618, 9.6325, 8.8212],
        [15.1332, 13.9180, 12.5237, 11.5618, 9.6325, 8.8212],
    ],
    [
        [12.2200, 10.9562, 9.4453, 8.3674, 5.9670, 4.5462],
        [12.2183, 10.9543, 9.4431, 8.3649, 5.9628, 4.5353],
        [12.2200, 10.9562, 9.4453, 8.3674, 5.9670, 4.5462],
        [12.2200, 10.9562, 9.4453, 8.3674, 5.9670, 4.5462],
    ],
    [
        [7.4978, 6.2422, 4.7445, 3.6798, 1.3425, 0.1025],
        [7.5135, 6.2559, 4.7562, 3.6907, 1.3545, 0.1257],
        [7.4977, 6.2421, 4.7443, 3.6796, 1.3421, 0.1017],
        [7.4977, 6.2421, 4.7443, 3.6796, 1.3421, 0.1016],
    ],
    [
        [4.1808, 3.1300, 1.9621, 1.2200, 0.1041, 0.0000],
        [4.2268, 3.1686, 1.9923, 1.2441, 0.1124, 0.0000],
        [4.1807, 3.1298, 1.9617, 1.2194, 0.1032, 0.0000],
        [4.1807, 3.1298, 1.9617, 1.2194, 0.1032, 0.0000],
    ],
];

/// Four-decimal benchmark grid with sigma2 = 0.9, same row layout.
pub const TABLE3: [[[f64; 6]; 4]; 6] = [
    [
        [57.3140, 55.8463, 54.2664, 53.2739, 51.5357, 50.8447],
        [57.3316, 55.8520, 54.2665, 53.2747, 51.5462, 50.8623],
        [57.3140, 55.8463, 54.2664, 53.2739, 51.5357, 50.8447],
        [57.3140, 55.8463, 54.2664, 53.2739, 51.5357, 50.8447],
    ],
    [
        [50.3507, 48.8007, 47.1273, 46.0732, 44.2212, 43.4827],
        [50.3596, 48.8036, 47.1274, 46.0735, 44.2264, 43.4916],
        [50.3507, 48.8007, 47.1273, 46.0732, 44.2212, 43.4827],
        [50.3507, 48.8007, 47.1273, 46.0732, 44.2212, 43.4827],
    ],
    [
        [43.6688, 42.0392, 40.2738, 39.1582, 37.1908, 36.4034],
        [43.6688, 42.0392, 40.2738, 39.1582, 37.1908, 36.4034],
        [43.6688, 42.0392, 40.2738, 39.1582, 37.1908, 36.4034],
        [43.6688, 42.0392, 40.2738, 39.1582, 37.1908, 36.4034],
    ],
    [
        [40.4445, 38.7772, 36.9676, 35.8220, 33.7973, 32.9853],
        [40.5532, 38.8694, 37.0419, 35.8848, 33.8393, 33.0186],
        [40.4384, 38.7708, 36.9608, 35.8150, 33.7897, 32.9773],
        [40.4365, 38.7699, 36.9608, 35.8155, 33.7912, 32.9793],
    ],
    [
        [34.2540, 32.5183, 30.6268, 29.4246, 27.2897, 26.4293],
        [34.7191, 32.9457, 31.0149, 29.7885, 27.6115, 26.7342],
        [34.2116, 32.4737, 30.5791, 29.3744, 27.2339, 26.3706],
        [34.1967, 32.4662, 30.5791, 29.3790, 27.2465, 26.3866],
    ],
    [
        [28.4438, 26.6541, 24.6953, 23.4450, 21.2123, 20.3073],
        [29.4191, 27.5847, 25.5840, 24.3110, 22.0454, 21.1300],
        [28.3588, 26.5640, 24.5981, 23.3423, 21.0965, 20.1847],
        [28.3241, 26.5466, 24.5981, 23.3529, 21.1263, 20.2226],
    ],
];
