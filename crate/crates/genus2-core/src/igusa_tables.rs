// Machine-generated by tools/gen_igusa.py; do not edit by hand.
//
// Coefficient tables for the Igusa invariants J2, J4, J6, J8, J10 of a
// binary sextic a0*x^6 + ... + a6.  Each table row is (numerator,
// exponents of a0..a6); the invariant is the row sum divided by DEN_*.

pub(crate) const DEN_J2: i64 = 4;
pub(crate) const J2_TERMS: [(i64, [u8; 7]); 4] = [
    (-120, [1, 0, 0, 0, 0, 0, 1]),
    (20, [0, 1, 0, 0, 0, 1, 0]),
    (-8, [0, 0, 1, 0, 1, 0, 0]),
    (3, [0, 0, 0, 2, 0, 0, 0]),
];

pub(crate) const DEN_J4: i64 = 128;
pub(crate) const J4_TERMS: [(i64, [u8; 7]); 18] = [
    (2640, [2, 0, 0, 0, 0, 0, 2]),
    (-880, [1, 1, 0, 0, 0, 1, 1]),
    (1312, [1, 0, 1, 0, 1, 0, 1]),
    (-400, [1, 0, 1, 0, 0, 2, 0]),
    (-672, [1, 0, 0, 2, 0, 0, 1]),
    (240, [1, 0, 0, 1, 1, 1, 0]),
    (-64, [1, 0, 0, 0, 3, 0, 0]),
    (-400, [0, 2, 0, 0, 1, 0, 1]),
    (240, [0, 2, 0, 0, 0, 2, 0]),
    (240, [0, 1, 1, 1, 0, 0, 1]),
    (-112, [0, 1, 1, 0, 1, 1, 0]),
    (-8, [0, 1, 0, 2, 0, 1, 0]),
    (16, [0, 1, 0, 1, 2, 0, 0]),
    (-64, [0, 0, 3, 0, 0, 0, 1]),
    (16, [0, 0, 2, 1, 0, 1, 0]),
    (16, [0, 0, 2, 0, 2, 0, 0]),
    (-16, [0, 0, 1, 2, 1, 0, 0]),
    (3, [0, 0, 0, 4, 0, 0, 0]),
];

pub(crate) const DEN_J6: i64 = 1024;
pub(crate) const J6_TERMS: [(i64, [u8; 7]); 53] = [
    (5120, [3, 0, 0, 0, 0, 0, 3]),
    (-2560, [2, 1, 0, 0, 0, 1, 2]),
    (-14336, [2, 0, 1, 0, 1, 0, 2]),
    (6400, [2, 0, 1, 0, 0, 2, 1]),
    (-2544, [2, 0, 0, 2, 0, 0, 2]),
    (10560, [2, 0, 0, 1, 1, 1, 1]),
    (-4000, [2, 0, 0, 1, 0, 3, 0]),
    (-4096, [2, 0, 0, 0, 3, 0, 1]),
    (1600, [2, 0, 0, 0, 2, 2, 0]),
    (6400, [1, 2, 0, 0, 1, 0, 2]),
    (-2240, [1, 2, 0, 0, 0, 2, 1]),
    (10560, [1, 1, 1, 1, 0, 0, 2]),
    (-6528, [1, 1, 1, 0, 1, 1, 1]),
    (1600, [1, 1, 1, 0, 0, 3, 0]),
    (-4432, [1, 1, 0, 2, 0, 1, 1]),
    (2624, [1, 1, 0, 1, 2, 0, 1]),
    (640, [1, 1, 0, 1, 1, 2, 0]),
    (-384, [1, 1, 0, 0, 3, 1, 0]),
    (-4096, [1, 0, 3, 0, 0, 0, 2]),
    (2624, [1, 0, 2, 1, 0, 1, 1]),
    (1024, [1, 0, 2, 0, 2, 0, 1]),
    (-640, [1, 0, 2, 0, 1, 2, 0]),
    (-1568, [1, 0, 1, 2, 1, 0, 1]),
    (80, [1, 0, 1, 2, 0, 2, 0]),
    (192, [1, 0, 1, 1, 2, 1, 0]),
    (312, [1, 0, 0, 4, 0, 0, 1]),
    (-48, [1, 0, 0, 3, 1, 1, 0]),
    (-4000, [0, 3, 0, 1, 0, 0, 2]),
    (1600, [0, 3, 0, 0, 1, 1, 1]),
    (-320, [0, 3, 0, 0, 0, 3, 0]),
    (1600, [0, 2, 2, 0, 0, 0, 2]),
    (640, [0, 2, 1, 1, 0, 1, 1]),
    (-640, [0, 2, 1, 0, 2, 0, 1]),
    (64, [0, 2, 1, 0, 1, 2, 0]),
    (80, [0, 2, 0, 2, 1, 0, 1]),
    (176, [0, 2, 0, 2, 0, 2, 0]),
    (-224, [0, 2, 0, 1, 2, 1, 0]),
    (64, [0, 2, 0, 0, 4, 0, 0]),
    (-384, [0, 1, 3, 0, 0, 1, 1]),
    (192, [0, 1, 2, 1, 1, 0, 1]),
    (-224, [0, 1, 2, 1, 0, 2, 0]),
    (128, [0, 1, 2, 0, 2, 1, 0]),
    (-48, [0, 1, 1, 3, 0, 0, 1]),
    (112, [0, 1, 1, 2, 1, 1, 0]),
    (-64, [0, 1, 1, 1, 3, 0, 0]),
    (-28, [0, 1, 0, 4, 0, 1, 0]),
    (16, [0, 1, 0, 3, 2, 0, 0]),
    (64, [0, 0, 4, 0, 0, 2, 0]),
    (-64, [0, 0, 3, 1, 1, 1, 0]),
    (16, [0, 0, 2, 3, 0, 1, 0]),
    (16, [0, 0, 2, 2, 2, 0, 0]),
    (-8, [0, 0, 1, 4, 1, 0, 0]),
    (1, [0, 0, 0, 6, 0, 0, 0]),
];

pub(crate) const DEN_J8: i64 = 65536;
pub(crate) const J8_TERMS: [(i64, [u8; 7]); 146] = [
    (-9427200, [4, 0, 0, 0, 0, 0, 4]),
    (6284800, [3, 1, 0, 0, 0, 1, 3]),
    (-209920, [3, 0, 1, 0, 1, 0, 3]),
    (-960000, [3, 0, 1, 0, 0, 2, 2]),
    (4830720, [3, 0, 0, 2, 0, 0, 3]),
    (-6336000, [3, 0, 0, 1, 1, 1, 2]),
    (1920000, [3, 0, 0, 1, 0, 3, 1]),
    (2304000, [3, 0, 0, 0, 3, 0, 2]),
    (-768000, [3, 0, 0, 0, 2, 2, 1]),
    (-960000, [2, 2, 0, 0, 1, 0, 3]),
    (-1171200, [2, 2, 0, 0, 0, 2, 2]),
    (-6336000, [2, 1, 1, 1, 0, 0, 3]),
    (4968960, [2, 1, 1, 0, 1, 1, 2]),
    (-960000, [2, 1, 1, 0, 0, 3, 1]),
    (752640, [2, 1, 0, 2, 0, 1, 2]),
    (-1344000, [2, 1, 0, 1, 2, 0, 2]),
    (960000, [2, 1, 0, 1, 1, 2, 1]),
    (-320000, [2, 1, 0, 1, 0, 4, 0]),
    (-256000, [2, 1, 0, 0, 3, 1, 1]),
    (128000, [2, 1, 0, 0, 2, 3, 0]),
    (2304000, [2, 0, 3, 0, 0, 0, 3]),
    (-1344000, [2, 0, 2, 1, 0, 1, 2]),
    (-1838592, [2, 0, 2, 0, 2, 0, 2]),
    (1152000, [2, 0, 2, 0, 1, 2, 1]),
    (-160000, [2, 0, 2, 0, 0, 4, 0]),
    (2509824, [2, 0, 1, 2, 1, 0, 2]),
    (-499200, [2, 0, 1, 2, 0, 2, 1]),
    (-1059840, [2, 0, 1, 1, 2, 1, 1]),
    (320000, [2, 0, 1, 1, 1, 3, 0]),
    (299008, [2, 0, 1, 0, 4, 0, 1]),
    (-102400, [2, 0, 1, 0, 3, 2, 0]),
    (-647712, [2, 0, 0, 4, 0, 0, 2]),
    (472320, [2, 0, 0, 3, 1, 1, 1]),
    (-48000, [2, 0, 0, 3, 0, 3, 0]),
    (-135168, [2, 0, 0, 2, 3, 0, 1]),
    (-38400, [2, 0, 0, 2, 2, 2, 0]),
    (30720, [2, 0, 0, 1, 4, 1, 0]),
    (-4096, [2, 0, 0, 0, 6, 0, 0]),
    (1920000, [1, 3, 0, 1, 0, 0, 3]),
    (-960000, [1, 3, 0, 0, 1, 1, 2]),
    (396800, [1, 3, 0, 0, 0, 3, 1]),
    (-768000, [1, 2, 2, 0, 0, 0, 3]),
    (960000, [1, 2, 1, 1, 0, 1, 2]),
    (1152000, [1, 2, 1, 0, 2, 0, 2]),
    (-1628160, [1, 2, 1, 0, 1, 2, 1]),
    (320000, [1, 2, 1, 0, 0, 4, 0]),
    (-499200, [1, 2, 0, 2, 1, 0, 2]),
    (-157440, [1, 2, 0, 2, 0, 2, 1]),
    (537600, [1, 2, 0, 1, 2, 1, 1]),
    (-64000, [1, 2, 0, 1, 1, 3, 0]),
    (-81920, [1, 2, 0, 0, 4, 0, 1]),
    (-256000, [1, 1, 3, 0, 0, 1, 2]),
    (-1059840, [1, 1, 2, 1, 1, 0, 2]),
    (537600, [1, 1, 2, 1, 0, 2, 1]),
    (551424, [1, 1, 2, 0, 2, 1, 1]),
    (-192000, [1, 1, 2, 0, 1, 3, 0]),
    (472320, [1, 1, 1, 3, 0, 0, 2]),
    (-388608, [1, 1, 1, 2, 1, 1, 1]),
    (19200, [1, 1, 1, 2, 0, 3, 0]),
    (-64512, [1, 1, 1, 1, 3, 0, 1]),
    (61440, [1, 1, 1, 1, 2, 2, 0]),
    (-2048, [1, 1, 1, 0, 4, 1, 0]),
    (-20256, [1, 1, 0, 4, 0, 1, 1]),
    (45312, [1, 1, 0, 3, 2, 0, 1]),
    (7680, [1, 1, 0, 3, 1, 2, 0]),
    (-13312, [1, 1, 0, 2, 3, 1, 0]),
    (2048, [1, 1, 0, 1, 5, 0, 0]),
    (299008, [1, 0, 4, 0, 1, 0, 2]),
    (-81920, [1, 0, 4, 0, 0, 2, 1]),
    (-135168, [1, 0, 3, 2, 0, 0, 2]),
    (-64512, [1, 0, 3, 1, 1, 1, 1]),
    (12800, [1, 0, 3, 1, 0, 3, 0]),
    (-82944, [1, 0, 3, 0, 3, 0, 1]),
    (33280, [1, 0, 3, 0, 2, 2, 0]),
    (45312, [1, 0, 2, 3, 0, 1, 1]),
    (118272, [1, 0, 2, 2, 2, 0, 1]),
    (-30720, [1, 0, 2, 2, 1, 2, 0]),
    (-11776, [1, 0, 2, 1, 3, 1, 0]),
    (2048, [1, 0, 2, 0, 5, 0, 0]),
    (-54336, [1, 0, 1, 4, 1, 0, 1]),
    (3360, [1, 0, 1, 4, 0, 2, 0]),
    (11520, [1, 0, 1, 3, 2, 1, 0]),
    (-2048, [1, 0, 1, 2, 4, 0, 0]),
    (7296, [1, 0, 0, 6, 0, 0, 1]),
    (-2016, [1, 0, 0, 5, 1, 1, 0]),
    (384, [1, 0, 0, 4, 3, 0, 0]),
    (-320000, [0, 4, 0, 1, 0, 1, 2]),
    (-160000, [0, 4, 0, 0, 2, 0, 2]),
    (320000, [0, 4, 0, 0, 1, 2, 1]),
    (-83200, [0, 4, 0, 0, 0, 4, 0]),
    (128000, [0, 3, 2, 0, 0, 1, 2]),
    (320000, [0, 3, 1, 1, 1, 0, 2]),
    (-64000, [0, 3, 1, 1, 0, 2, 1]),
    (-192000, [0, 3, 1, 0, 2, 1, 1]),
    (69120, [0, 3, 1, 0, 1, 3, 0]),
    (-48000, [0, 3, 0, 3, 0, 0, 2]),
    (19200, [0, 3, 0, 2, 1, 1, 1]),
    (14080, [0, 3, 0, 2, 0, 3, 0]),
    (12800, [0, 3, 0, 1, 3, 0, 1]),
    (-25600, [0, 3, 0, 1, 2, 2, 0]),
    (5120, [0, 3, 0, 0, 4, 1, 0]),
    (-102400, [0, 2, 3, 0, 1, 0, 2]),
    (-38400, [0, 2, 2, 2, 0, 0, 2]),
    (61440, [0, 2, 2, 1, 1, 1, 1]),
    (-25600, [0, 2, 2, 1, 0, 3, 0]),
    (33280, [0, 2, 2, 0, 3, 0, 1]),
    (-12032, [0, 2, 2, 0, 2, 2, 0]),
    (7680, [0, 2, 1, 3, 0, 1, 1]),
    (-30720, [0, 2, 1, 2, 2, 0, 1]),
    (9984, [0, 2, 1, 2, 1, 2, 0]),
    (5632, [0, 2, 1, 1, 3, 1, 0]),
    (-2048, [0, 2, 1, 0, 5, 0, 0]),
    (3360, [0, 2, 0, 4, 1, 0, 1]),
    (-1632, [0, 2, 0, 4, 0, 2, 0]),
    (-1152, [0, 2, 0, 3, 2, 1, 0]),
    (512, [0, 2, 0, 2, 4, 0, 0]),
    (30720, [0, 1, 4, 1, 0, 0, 2]),
    (-2048, [0, 1, 4, 0, 1, 1, 1]),
    (5120, [0, 1, 4, 0, 0, 3, 0]),
    (-13312, [0, 1, 3, 2, 0, 1, 1]),
    (-11776, [0, 1, 3, 1, 2, 0, 1]),
    (5632, [0, 1, 3, 1, 1, 2, 0]),
    (-512, [0, 1, 3, 0, 3, 1, 0]),
    (11520, [0, 1, 2, 3, 1, 0, 1]),
    (-1152, [0, 1, 2, 3, 0, 2, 0]),
    (-4608, [0, 1, 2, 2, 2, 1, 0]),
    (1536, [0, 1, 2, 1, 4, 0, 0]),
    (-2016, [0, 1, 1, 5, 0, 0, 1]),
    (2016, [0, 1, 1, 4, 1, 1, 0]),
    (-768, [0, 1, 1, 3, 3, 0, 0]),
    (-208, [0, 1, 0, 6, 0, 1, 0]),
    (96, [0, 1, 0, 5, 2, 0, 0]),
    (-4096, [0, 0, 6, 0, 0, 0, 2]),
    (2048, [0, 0, 5, 1, 0, 1, 1]),
    (2048, [0, 0, 5, 0, 2, 0, 1]),
    (-2048, [0, 0, 5, 0, 1, 2, 0]),
    (-2048, [0, 0, 4, 2, 1, 0, 1]),
    (512, [0, 0, 4, 2, 0, 2, 0]),
    (1536, [0, 0, 4, 1, 2, 1, 0]),
    (-256, [0, 0, 4, 0, 4, 0, 0]),
    (384, [0, 0, 3, 4, 0, 0, 1]),
    (-768, [0, 0, 3, 3, 1, 1, 0]),
    (96, [0, 0, 2, 5, 0, 1, 0]),
    (96, [0, 0, 2, 4, 2, 0, 0]),
    (-32, [0, 0, 1, 6, 1, 0, 0]),
    (3, [0, 0, 0, 8, 0, 0, 0]),
];

pub(crate) const DEN_J10: i64 = 4096;
pub(crate) const J10_TERMS: [(i64, [u8; 7]); 246] = [
    (-46656, [5, 0, 0, 0, 0, 0, 5]),
    (38880, [4, 1, 0, 0, 0, 1, 4]),
    (62208, [4, 0, 1, 0, 1, 0, 4]),
    (-32400, [4, 0, 1, 0, 0, 2, 3]),
    (34992, [4, 0, 0, 2, 0, 0, 4]),
    (-77760, [4, 0, 0, 1, 1, 1, 3]),
    (27000, [4, 0, 0, 1, 0, 3, 2]),
    (-13824, [4, 0, 0, 0, 3, 0, 3]),
    (43200, [4, 0, 0, 0, 2, 2, 2]),
    (-22500, [4, 0, 0, 0, 1, 4, 1]),
    (3125, [4, 0, 0, 0, 0, 6, 0]),
    (-32400, [3, 2, 0, 0, 1, 0, 4]),
    (540, [3, 2, 0, 0, 0, 2, 3]),
    (-77760, [3, 1, 1, 1, 0, 0, 4]),
    (31968, [3, 1, 1, 0, 1, 1, 3]),
    (-1800, [3, 1, 1, 0, 0, 3, 2]),
    (15552, [3, 1, 0, 2, 0, 1, 3]),
    (46656, [3, 1, 0, 1, 2, 0, 3]),
    (-31320, [3, 1, 0, 1, 1, 2, 2]),
    (2250, [3, 1, 0, 1, 0, 4, 1]),
    (-21888, [3, 1, 0, 0, 3, 1, 2]),
    (15600, [3, 1, 0, 0, 2, 3, 1]),
    (-2500, [3, 1, 0, 0, 1, 5, 0]),
    (-13824, [3, 0, 3, 0, 0, 0, 4]),
    (46656, [3, 0, 2, 1, 0, 1, 3]),
    (-17280, [3, 0, 2, 0, 2, 0, 3]),
    (-6480, [3, 0, 2, 0, 1, 2, 2]),
    (1500, [3, 0, 2, 0, 0, 4, 1]),
    (3888, [3, 0, 1, 2, 1, 0, 3]),
    (-27540, [3, 0, 1, 2, 0, 2, 2]),
    (-3456, [3, 0, 1, 1, 2, 1, 2]),
    (19800, [3, 0, 1, 1, 1, 3, 1]),
    (-3750, [3, 0, 1, 1, 0, 5, 0]),
    (9216, [3, 0, 1, 0, 4, 0, 2]),
    (-10560, [3, 0, 1, 0, 3, 2, 1]),
    (2000, [3, 0, 1, 0, 2, 4, 0]),
    (-8748, [3, 0, 0, 4, 0, 0, 3]),
    (21384, [3, 0, 0, 3, 1, 1, 2]),
    (-1350, [3, 0, 0, 3, 0, 3, 1]),
    (-8640, [3, 0, 0, 2, 3, 0, 2]),
    (-9720, [3, 0, 0, 2, 2, 2, 1]),
    (2250, [3, 0, 0, 2, 1, 4, 0]),
    (6912, [3, 0, 0, 1, 4, 1, 1]),
    (-1600, [3, 0, 0, 1, 3, 3, 0]),
    (-1024, [3, 0, 0, 0, 6, 0, 1]),
    (256, [3, 0, 0, 0, 5, 2, 0]),
    (27000, [2, 3, 0, 1, 0, 0, 4]),
    (-1800, [2, 3, 0, 0, 1, 1, 3]),
    (410, [2, 3, 0, 0, 0, 3, 2]),
    (43200, [2, 2, 2, 0, 0, 0, 4]),
    (-31320, [2, 2, 1, 1, 0, 1, 3]),
    (-6480, [2, 2, 1, 0, 2, 0, 3]),
    (8748, [2, 2, 1, 0, 1, 2, 2]),
    (-1700, [2, 2, 1, 0, 0, 4, 1]),
    (-27540, [2, 2, 0, 2, 1, 0, 3]),
    (15417, [2, 2, 0, 2, 0, 2, 2]),
    (16632, [2, 2, 0, 1, 2, 1, 2]),
    (-12330, [2, 2, 0, 1, 1, 3, 1]),
    (2000, [2, 2, 0, 1, 0, 5, 0]),
    (-192, [2, 2, 0, 0, 4, 0, 2]),
    (248, [2, 2, 0, 0, 3, 2, 1]),
    (-50, [2, 2, 0, 0, 2, 4, 0]),
    (-21888, [2, 1, 3, 0, 0, 1, 3]),
    (-3456, [2, 1, 2, 1, 1, 0, 3]),
    (16632, [2, 1, 2, 1, 0, 2, 2]),
    (15264, [2, 1, 2, 0, 2, 1, 2]),
    (-13040, [2, 1, 2, 0, 1, 3, 1]),
    (2250, [2, 1, 2, 0, 0, 5, 0]),
    (21384, [2, 1, 1, 3, 0, 0, 3]),
    (-22896, [2, 1, 1, 2, 1, 1, 2]),
    (1980, [2, 1, 1, 2, 0, 3, 1]),
    (-5760, [2, 1, 1, 1, 3, 0, 2]),
    (10152, [2, 1, 1, 1, 2, 2, 1]),
    (-2050, [2, 1, 1, 1, 1, 4, 0]),
    (-640, [2, 1, 1, 0, 4, 1, 1]),
    (160, [2, 1, 1, 0, 3, 3, 0]),
    (-6318, [2, 1, 0, 4, 0, 1, 2]),
    (5832, [2, 1, 0, 3, 2, 0, 2]),
    (3942, [2, 1, 0, 3, 1, 2, 1]),
    (-900, [2, 1, 0, 3, 0, 4, 0]),
    (-4464, [2, 1, 0, 2, 3, 1, 1]),
    (1020, [2, 1, 0, 2, 2, 3, 0]),
    (768, [2, 1, 0, 1, 5, 0, 1]),
    (-192, [2, 1, 0, 1, 4, 2, 0]),
    (9216, [2, 0, 4, 0, 1, 0, 3]),
    (-192, [2, 0, 4, 0, 0, 2, 2]),
    (-8640, [2, 0, 3, 2, 0, 0, 3]),
    (-5760, [2, 0, 3, 1, 1, 1, 2]),
    (-120, [2, 0, 3, 1, 0, 3, 1]),
    (-4352, [2, 0, 3, 0, 3, 0, 2]),
    (4816, [2, 0, 3, 0, 2, 2, 1]),
    (-900, [2, 0, 3, 0, 1, 4, 0]),
    (5832, [2, 0, 2, 3, 0, 1, 2]),
    (8208, [2, 0, 2, 2, 2, 0, 2]),
    (-4536, [2, 0, 2, 2, 1, 2, 1]),
    (825, [2, 0, 2, 2, 0, 4, 0]),
    (-2496, [2, 0, 2, 1, 3, 1, 1]),
    (560, [2, 0, 2, 1, 2, 3, 0]),
    (512, [2, 0, 2, 0, 5, 0, 1]),
    (-128, [2, 0, 2, 0, 4, 2, 0]),
    (-4860, [2, 0, 1, 4, 1, 0, 2]),
    (162, [2, 0, 1, 4, 0, 2, 1]),
    (2808, [2, 0, 1, 3, 2, 1, 1]),
    (-630, [2, 0, 1, 3, 1, 3, 0]),
    (-576, [2, 0, 1, 2, 4, 0, 1]),
    (144, [2, 0, 1, 2, 3, 2, 0]),
    (729, [2, 0, 0, 6, 0, 0, 2]),
    (-486, [2, 0, 0, 5, 1, 1, 1]),
    (108, [2, 0, 0, 5, 0, 3, 0]),
    (108, [2, 0, 0, 4, 3, 0, 1]),
    (-27, [2, 0, 0, 4, 2, 2, 0]),
    (-22500, [1, 4, 1, 0, 0, 0, 4]),
    (2250, [1, 4, 0, 1, 0, 1, 3]),
    (1500, [1, 4, 0, 0, 2, 0, 3]),
    (-1700, [1, 4, 0, 0, 1, 2, 2]),
    (320, [1, 4, 0, 0, 0, 4, 1]),
    (15600, [1, 3, 2, 0, 0, 1, 3]),
    (19800, [1, 3, 1, 1, 1, 0, 3]),
    (-12330, [1, 3, 1, 1, 0, 2, 2]),
    (-13040, [1, 3, 1, 0, 2, 1, 2]),
    (9768, [1, 3, 1, 0, 1, 3, 1]),
    (-1600, [1, 3, 1, 0, 0, 5, 0]),
    (-1350, [1, 3, 0, 3, 0, 0, 3]),
    (1980, [1, 3, 0, 2, 1, 1, 2]),
    (-208, [1, 3, 0, 2, 0, 3, 1]),
    (-120, [1, 3, 0, 1, 3, 0, 2]),
    (-682, [1, 3, 0, 1, 2, 2, 1]),
    (160, [1, 3, 0, 1, 1, 4, 0]),
    (144, [1, 3, 0, 0, 4, 1, 1]),
    (-36, [1, 3, 0, 0, 3, 3, 0]),
    (-10560, [1, 2, 3, 0, 1, 0, 3]),
    (248, [1, 2, 3, 0, 0, 2, 2]),
    (-9720, [1, 2, 2, 2, 0, 0, 3]),
    (10152, [1, 2, 2, 1, 1, 1, 2]),
    (-682, [1, 2, 2, 1, 0, 3, 1]),
    (4816, [1, 2, 2, 0, 3, 0, 2]),
    (-5428, [1, 2, 2, 0, 2, 2, 1]),
    (1020, [1, 2, 2, 0, 1, 4, 0]),
    (3942, [1, 2, 1, 3, 0, 1, 2]),
    (-4536, [1, 2, 1, 2, 2, 0, 2]),
    (-2412, [1, 2, 1, 2, 1, 2, 1]),
    (560, [1, 2, 1, 2, 0, 4, 0]),
    (3272, [1, 2, 1, 1, 3, 1, 1]),
    (-746, [1, 2, 1, 1, 2, 3, 0]),
    (-576, [1, 2, 1, 0, 5, 0, 1]),
    (144, [1, 2, 1, 0, 4, 2, 0]),
    (162, [1, 2, 0, 4, 1, 0, 2]),
    (-108, [1, 2, 0, 3, 2, 1, 1]),
    (24, [1, 2, 0, 3, 1, 3, 0]),
    (24, [1, 2, 0, 2, 4, 0, 1]),
    (-6, [1, 2, 0, 2, 3, 2, 0]),
    (6912, [1, 1, 4, 1, 0, 0, 3]),
    (-640, [1, 1, 4, 0, 1, 1, 2]),
    (144, [1, 1, 4, 0, 0, 3, 1]),
    (-4464, [1, 1, 3, 2, 0, 1, 2]),
    (-2496, [1, 1, 3, 1, 2, 0, 2]),
    (3272, [1, 1, 3, 1, 1, 2, 1]),
    (-630, [1, 1, 3, 1, 0, 4, 0]),
    (-96, [1, 1, 3, 0, 3, 1, 1]),
    (24, [1, 1, 3, 0, 2, 3, 0]),
    (2808, [1, 1, 2, 3, 1, 0, 2]),
    (-108, [1, 1, 2, 3, 0, 2, 1]),
    (-1584, [1, 1, 2, 2, 2, 1, 1]),
    (356, [1, 1, 2, 2, 1, 3, 0]),
    (320, [1, 1, 2, 1, 4, 0, 1]),
    (-80, [1, 1, 2, 1, 3, 2, 0]),
    (-486, [1, 1, 1, 5, 0, 0, 2]),
    (324, [1, 1, 1, 4, 1, 1, 1]),
    (-72, [1, 1, 1, 4, 0, 3, 0]),
    (-72, [1, 1, 1, 3, 3, 0, 1]),
    (18, [1, 1, 1, 3, 2, 2, 0]),
    (-1024, [1, 0, 6, 0, 0, 0, 3]),
    (768, [1, 0, 5, 1, 0, 1, 2]),
    (512, [1, 0, 5, 0, 2, 0, 2]),
    (-576, [1, 0, 5, 0, 1, 2, 1]),
    (108, [1, 0, 5, 0, 0, 4, 0]),
    (-576, [1, 0, 4, 2, 1, 0, 2]),
    (24, [1, 0, 4, 2, 0, 2, 1]),
    (320, [1, 0, 4, 1, 2, 1, 1]),
    (-72, [1, 0, 4, 1, 1, 3, 0]),
    (-64, [1, 0, 4, 0, 4, 0, 1]),
    (16, [1, 0, 4, 0, 3, 2, 0]),
    (108, [1, 0, 3, 4, 0, 0, 2]),
    (-72, [1, 0, 3, 3, 1, 1, 1]),
    (16, [1, 0, 3, 3, 0, 3, 0]),
    (16, [1, 0, 3, 2, 3, 0, 1]),
    (-4, [1, 0, 3, 2, 2, 2, 0]),
    (3125, [0, 6, 0, 0, 0, 0, 4]),
    (-2500, [0, 5, 1, 0, 0, 1, 3]),
    (-3750, [0, 5, 0, 1, 1, 0, 3]),
    (2000, [0, 5, 0, 1, 0, 2, 2]),
    (2250, [0, 5, 0, 0, 2, 1, 2]),
    (-1600, [0, 5, 0, 0, 1, 3, 1]),
    (256, [0, 5, 0, 0, 0, 5, 0]),
    (2000, [0, 4, 2, 0, 1, 0, 3]),
    (-50, [0, 4, 2, 0, 0, 2, 2]),
    (2250, [0, 4, 1, 2, 0, 0, 3]),
    (-2050, [0, 4, 1, 1, 1, 1, 2]),
    (160, [0, 4, 1, 1, 0, 3, 1]),
    (-900, [0, 4, 1, 0, 3, 0, 2]),
    (1020, [0, 4, 1, 0, 2, 2, 1]),
    (-192, [0, 4, 1, 0, 1, 4, 0]),
    (-900, [0, 4, 0, 3, 0, 1, 2]),
    (825, [0, 4, 0, 2, 2, 0, 2]),
    (560, [0, 4, 0, 2, 1, 2, 1]),
    (-128, [0, 4, 0, 2, 0, 4, 0]),
    (-630, [0, 4, 0, 1, 3, 1, 1]),
    (144, [0, 4, 0, 1, 2, 3, 0]),
    (108, [0, 4, 0, 0, 5, 0, 1]),
    (-27, [0, 4, 0, 0, 4, 2, 0]),
    (-1600, [0, 3, 3, 1, 0, 0, 3]),
    (160, [0, 3, 3, 0, 1, 1, 2]),
    (-36, [0, 3, 3, 0, 0, 3, 1]),
    (1020, [0, 3, 2, 2, 0, 1, 2]),
    (560, [0, 3, 2, 1, 2, 0, 2]),
    (-746, [0, 3, 2, 1, 1, 2, 1]),
    (144, [0, 3, 2, 1, 0, 4, 0]),
    (24, [0, 3, 2, 0, 3, 1, 1]),
    (-6, [0, 3, 2, 0, 2, 3, 0]),
    (-630, [0, 3, 1, 3, 1, 0, 2]),
    (24, [0, 3, 1, 3, 0, 2, 1]),
    (356, [0, 3, 1, 2, 2, 1, 1]),
    (-80, [0, 3, 1, 2, 1, 3, 0]),
    (-72, [0, 3, 1, 1, 4, 0, 1]),
    (18, [0, 3, 1, 1, 3, 2, 0]),
    (108, [0, 3, 0, 5, 0, 0, 2]),
    (-72, [0, 3, 0, 4, 1, 1, 1]),
    (16, [0, 3, 0, 4, 0, 3, 0]),
    (16, [0, 3, 0, 3, 3, 0, 1]),
    (-4, [0, 3, 0, 3, 2, 2, 0]),
    (256, [0, 2, 5, 0, 0, 0, 3]),
    (-192, [0, 2, 4, 1, 0, 1, 2]),
    (-128, [0, 2, 4, 0, 2, 0, 2]),
    (144, [0, 2, 4, 0, 1, 2, 1]),
    (-27, [0, 2, 4, 0, 0, 4, 0]),
    (144, [0, 2, 3, 2, 1, 0, 2]),
    (-6, [0, 2, 3, 2, 0, 2, 1]),
    (-80, [0, 2, 3, 1, 2, 1, 1]),
    (18, [0, 2, 3, 1, 1, 3, 0]),
    (16, [0, 2, 3, 0, 4, 0, 1]),
    (-4, [0, 2, 3, 0, 3, 2, 0]),
    (-27, [0, 2, 2, 4, 0, 0, 2]),
    (18, [0, 2, 2, 3, 1, 1, 1]),
    (-4, [0, 2, 2, 3, 0, 3, 0]),
    (-4, [0, 2, 2, 2, 3, 0, 1]),
    (1, [0, 2, 2, 2, 2, 2, 0]),
];

