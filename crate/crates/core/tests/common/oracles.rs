//! Reference values from independent 50-digit evaluations (Fourier
//! inversion of the characteristic function and Hankel transforms of the
//! isotropic chf). `tests/oracles/gen_oracles.py` regenerates them.
#![allow(dead_code, clippy::excessive_precision)]

/// `K(1.0)` at `α = 1.5`.
pub const KERNEL_AT_ONE_ALPHA_1_5: f64 = 0.628_750_327_436_426_5;

/// `(α, x, f(x; α, 1))`
pub const SAS_PDF: &[(f64, f64, f64)] = &[
    (0.5, 0.0, 0.63661977236758134308),
    (0.5, 0.01, 0.63289129265925317782),
    (0.5, 0.5, 0.17076240172520622381),
    (0.5, 1.0, 0.086107146912604118325),
    (0.5, 3.0, 0.023799193000393282661),
    (0.5, 10.0, 0.0048722553837211159485),
    (0.5, 100.0, 0.00018405372640139751971),
    (0.8, 0.0, 0.36064608663529355539),
    (0.8, 0.01, 0.36055812471104181697),
    (0.8, 0.5, 0.23721505016093920038),
    (0.8, 1.0, 0.13184623767479969955),
    (0.8, 3.0, 0.030040231532639798323),
    (0.8, 10.0, 0.0041019115941696023704),
    (0.8, 100.0, 0.0000699665756546706662),
    (1.1, 0.0, 0.30714118455442595429),
    (1.1, 0.01, 0.30711834179502109692),
    (1.1, 0.5, 0.25813093805652117708),
    (1.1, 1.0, 0.17088961506867469178),
    (1.1, 3.0, 0.032207029069622623743),
    (1.1, 10.0, 0.0026664308986945298015),
    (1.1, 100.0, 0.000020805259098702808185),
    (1.25, 0.0, 0.29646866213415081047),
    (1.25, 0.01, 0.29645284697944200688),
    (1.25, 0.5, 0.26059211444513689976),
    (1.25, 1.0, 0.18537177455356899766),
    (1.25, 3.0, 0.032274532919300178853),
    (1.25, 10.0, 0.001984327227464819685),
    (1.25, 100.0, 0.00001057379757411950459),
    (1.5, 0.0, 0.28735275145216444502),
    (1.5, 0.01, 0.28734214136826379107),
    (1.5, 0.5, 0.26229684035409003579),
    (1.5, 1.0, 0.20203815960784013039),
    (1.5, 3.0, 0.031509423616324935314),
    (1.5, 10.0, 0.0010477760249294404612),
    (1.5, 100.0, 3.0016360347717750945e-6),
    (1.75, 0.0, 0.28349242925222955639),
    (1.75, 0.01, 0.28348414038393009062),
    (1.75, 0.5, 0.26358052116148607812),
    (1.75, 1.0, 0.21255215284501127504),
    (1.75, 3.0, 0.030427544106716777891),
    (1.75, 10.0, 0.00039565781022252797246),
    (1.75, 100.0, 6.2085695702125969277e-7),
    (1.95, 0.0, 0.2822483933758184522),
    (1.95, 0.01, 0.2822411451581737747),
    (1.95, 0.5, 0.26470654833807185464),
    (1.95, 1.0, 0.21845263692715054607),
    (1.95, 3.0, 0.02982530516483544941),
    (1.95, 10.0, 0.000061193926321832784452),
    (1.95, 100.0, 6.0157716643498246706e-8),
    (1.999, 0.0, 0.2820973747293044341),
    (1.999, 0.01, 0.2820903187247788574),
    (1.999, 0.5, 0.26499754127211425326),
    (1.999, 1.0, 0.21967153762896583259),
    (1.999, 3.0, 0.029734196882079049441),
    (1.999, 10.0, 1.1440116765338594258e-6),
    (1.999, 100.0, 1.0048982372171730357e-9),
];

/// `(α, x, F(x; α, 1))`
pub const SAS_CDF: &[(f64, f64, f64)] = &[
    (0.5, 0.01, 0.50635365053164032242),
    (0.5, 0.5, 0.66869044999924191724),
    (0.5, 1.0, 0.72871968731065673363),
    (0.5, 3.0, 0.81645450815146621842),
    (0.5, 10.0, 0.88871461031091890791),
    (0.8, 0.01, 0.50360616761910044933),
    (0.8, 0.5, 0.65503899136059381029),
    (0.8, 1.0, 0.74414023790711806549),
    (0.8, 3.0, 0.86995816222991063775),
    (0.8, 10.0, 0.94637539251269974105),
    (1.25, 0.01, 0.50296463390331036053),
    (1.25, 0.5, 0.642019370008234863),
    (1.25, 1.0, 0.7539711127258795064),
    (1.25, 3.0, 0.92563368745861052868),
    (1.25, 10.0, 0.98455666883794416934),
    (1.5, 0.01, 0.50287349214724779301),
    (1.5, 0.5, 0.63940422648127160207),
    (1.5, 1.0, 0.7563420243992704645),
    (1.5, 3.0, 0.94840219644081495262),
    (1.5, 10.0, 0.99336019080223152947),
    (1.95, 0.01, 0.50282245977290646653),
    (1.95, 0.5, 0.63816232253363078403),
    (1.95, 1.0, 0.75986780956141061733),
    (1.95, 3.0, 0.9801176740231003006),
    (1.95, 10.0, 0.9997069155810459897),
];

/// `(r, α, σ, f_R(r), F_R(r))`
pub const AMPLITUDE: &[(f64, f64, f64, f64, f64)] = &[
    (2.0, 1.5, 1.0, 0.28198380010480931454, 0.60729319000490942876),
    (0.5, 1.2, 0.5, 0.77245351450642595886, 0.2702395943481788035),
    (1.5, 1.3, 0.8, 0.32831270644448909312, 0.55829316189009130513),
    (3.0, 0.9, 1.0, 0.088466637935543348732, 0.65743344607194686038),
];

/// Twenty-point `(r, α, σ, f_R(r), F_R(r))` grid.
pub const AMPLITUDE_GRID: &[(f64, f64, f64, f64, f64)] = &[
    (0.3, 0.8, 0.5, 0.76883451363003445758, 0.17897868217990008839),
    (1.0, 0.8, 1.0, 0.29476695512404235945, 0.31553542623026979999),
    (2.5, 0.8, 1.0, 0.10562397230891734181, 0.58359951544218955203),
    (6.0, 0.8, 2.0, 0.040728483109068274123, 0.62997571073920100388),
    (0.3, 1.1, 0.5, 0.72687964106983021308, 0.12921733762177322281),
    (1.0, 1.1, 1.0, 0.37337894678137192633, 0.28125936835803611049),
    (2.5, 1.1, 1.0, 0.13927856837039018509, 0.64973504154573761328),
    (6.0, 1.1, 2.0, 0.050378437910998810628, 0.70906389582480337004),
    (0.3, 1.4, 0.5, 0.63758462844343425224, 0.10444837513976950357),
    (1.0, 1.4, 1.0, 0.39641451941021033578, 0.2515568354735498219),
    (2.5, 1.4, 1.0, 0.17558062704745396676, 0.70725782045410846423),
    (6.0, 1.4, 2.0, 0.058387801522877737526, 0.77928624663008345276),
    (0.3, 1.7, 0.5, 0.58089551873310041499, 0.092410445216692520964),
    (1.0, 1.7, 1.0, 0.39467714350046026434, 0.23247669923234513151),
    (2.5, 1.7, 1.0, 0.21826959112262149107, 0.75440815015862926819),
    (6.0, 1.7, 2.0, 0.067354128917082441504, 0.84146279224252465389),
    (0.3, 1.95, 0.5, 0.55261721119017205902, 0.086882502219500861431),
    (1.0, 1.95, 1.0, 0.39023063047076603614, 0.22268720458320535301),
    (2.5, 1.95, 1.0, 0.25499802701969252229, 0.78509834195422735492),
    (6.0, 1.95, 2.0, 0.076944284085337592255, 0.88641827415660042153),
];
