/// A cycle evaluated by 50-digit direct summation of the partition sums
/// (m = 9.11e-31 kg, χ = 1/2, T_h = 2 K, T_c = 1 K, SI constants).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferencePoint {
    pub alpha: f64,
    pub a_nm: f64,
    /// ln Z at corners A, B, C, D
    pub log_z: [f64; 4],
    /// U at corners A, B, C, D, joules
    pub internal_energy: [f64; 4],
    pub work: f64,
    pub efficiency: Option<f64>,
}

#[rustfmt::skip]
pub const REFERENCE_POINTS: [ReferencePoint; 12] = [
    ReferencePoint { alpha: 2.0, a_nm: 1.0, log_z: [-5.4541920401732606048e+2, -2.1809836688887442966e+3, -4.3626604849580485386e+3, -1.090838408034652121e+3], internal_energy: [1.5060649572146344162e-20, 6.0242598288585376647e-20, 6.0242598288585376647e-20, 1.5060649572146344162e-20], work: 9.569929616929079315e-24, efficiency: Some(5.0e-1) },
    ReferencePoint { alpha: 2.0, a_nm: 12.0, log_z: [-3.7876217426615381909, -1.4457386264365778593e+1, -2.9607919709291502495e+1, -7.575266722327869218], internal_energy: [1.0459148971341001927e-22, 4.1835137700406511562e-22, 4.183513770040651156e-22, 1.0458784429337207575e-22], work: 9.5696087954547770692e-24, efficiency: Some(4.9999162003679087772e-1) },
    ReferencePoint { alpha: 2.0, a_nm: 20.0, log_z: [-1.3469399290042239471, -4.7610447813021900894, -1.0215236899786569768e+1, -2.7268162176444572602], internal_energy: [3.95154851255719446e-23, 1.5060653110395448615e-22, 1.5060649572146621246e-22, 3.7683224621232314777e-23], work: 9.115196259381561786e-24, efficiency: Some(4.8875839782280939913e-1) },
    ReferencePoint { alpha: 2.0, a_nm: 35.0, log_z: [-1.8855859599172393057e-1, -1.0830421684636583904, -2.8687512838760380519, -8.2285930066943082471e-1], internal_energy: [2.2142211968092487594e-23, 4.988003966981216057e-23, 4.918100498823300865e-23, 1.4752538086534876566e-23], work: 3.5472302102261138137e-24, efficiency: Some(3.4015928537207746123e-1) },
    ReferencePoint { alpha: 2.0, a_nm: 80.0, log_z: [9.3049968206662836779e-1, 7.1087704492473208706e-1, 1.3681846018604880296e-1, 4.987233388697008086e-1], internal_energy: [1.6528830283818593482e-23, 2.0588420028735368051e-23, 1.2923375507167220947e-23, 8.9994342878649033472e-24], work: -1.0677993984493845823e-24, efficiency: None },
    ReferencePoint { alpha: 1.8, a_nm: 60.0, log_z: [-1.4885061971186236702, -4.5711524556786572685, -9.8354563193460719251, -3.0229972298803952508], internal_energy: [4.4140201654041404427e-23, 1.4536382160699740487e-22, 1.453630589370911892e-22, 4.1801567778064928294e-23], work: 8.9350988094239337988e-24, efficiency: Some(4.8451818236128541398e-1) },
    ReferencePoint { alpha: 1.8, a_nm: 150.0, log_z: [2.3860091840515784103e-1, -2.3879006868058111039e-1, -1.3236687849911031135, -3.4611213823268992522e-1], internal_energy: [2.129931925347614954e-23, 3.3432138705111761452e-23, 2.8390305165962999624e-23, 1.2919794741081459228e-23], work: 3.1443828932479614937e-25, efficiency: Some(4.2896533357484918904e-2) },
    ReferencePoint { alpha: 1.5, a_nm: 300.0, log_z: [-4.2616523569313332938, -1.1361792941354508484e+1, -2.3416733063804134599e+1, -8.5241297369005709993], internal_energy: [1.1777708518107584539e-22, 3.3287282065787217884e-22, 3.3287282049501022566e-22, 1.1768835096658346485e-22], work: 9.5585389519953337258e-24, efficiency: Some(4.9970327327990276803e-1) },
    ReferencePoint { alpha: 1.5, a_nm: 450.0, log_z: [-2.3056381114705987358, -5.8687249244623176342, -1.2430609343468945064e+1, -4.639741844515947641], internal_energy: [6.5737523693576799392e-23, 1.8119505301298707856e-22, 1.8119301322452221117e-22, 6.4085621724191138988e-23], work: 9.1770893102154952776e-24, efficiency: Some(4.9017711701555465197e-1) },
    ReferencePoint { alpha: 1.2, a_nm: 0.5, log_z: [-4.6954892809970469551e+5, -1.0787394694503231407e+6, -2.1574796320478268414e+6, -9.3909785619940939102e+5], internal_energy: [1.2965645160638583763e-17, 2.9787230535001617737e-17, 2.9787230535001617737e-17, 1.2965645160638583763e-17], work: 9.569929616929079315e-24, efficiency: Some(5.0e-1) },
    ReferencePoint { alpha: 0.8, a_nm: 3.0, log_z: [-1.6428770832370134857e+6, -2.8604144473293704688e+6, -5.7208295878059214976e+6, -3.2857541664740269714e+6], internal_energy: [4.536473204188198864e-17, 7.8984586065676194026e-17, 7.8984586065676194026e-17, 4.536473204188198864e-17], work: 9.569929616929079315e-24, efficiency: Some(5.0e-1) },
    ReferencePoint { alpha: 2.0, a_nm: 200.0, log_z: [1.9586063327915517977, 1.8854683459887520504, 1.4739719384921236892, 1.5823841140608165631], internal_energy: [1.4780226309085849118e-23, 1.5901734861365838313e-23, 8.4841850720458000336e-24, 7.6125003205149230156e-24], work: -5.2276614895857088745e-25, efficiency: None },
];
