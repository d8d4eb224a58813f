// Reference values generated with mpmath (40 significant digits) and
// rounded to 19 digits.

#[allow(clippy::excessive_precision)]
pub const GOLDEN_JY: &[(f64, f64, f64, f64)] = &[
    (0.0, 1e-6, 9.9999999999975e-1, -8.869031481659443703),
    (0.0, 1e-3, 9.99999750000015625e-1, -4.471416611375923269),
    (0.0, 0.5, 9.384698072408129042e-1, -4.445187335067065571e-1),
    (0.0, 1.9, 2.818185593743854707e-1, 4.968199712838202059e-1),
    (0.0, 2.1, 1.666069803319903266e-1, 5.182937375137607286e-1),
    (0.0, 8.68, -7.119995658243859057e-3, 2.705059575756528047e-1),
    (
        0.0,
        17.0,
        -1.698542521511835479e-1,
        -9.263719844232369253e-2,
    ),
    (0.0, 26.03, 1.554781040222064465e-1, 1.670970980995831211e-2),
    (
        0.0,
        99.0,
        -5.447423527049907344e-2,
        -5.884707676380543272e-2,
    ),
    (0.0, 1000.0, 2.478668615242017456e-2, 4.7159179776228134e-3),
    (
        0.0,
        10000.0,
        -7.096160353388801477e-3,
        3.647805558986605887e-3,
    ),
    (0.3, 1e-6, 1.434401478336014443e-2, -7.396000933425444439e+1),
    (0.3, 1e-3, 1.139385375060162825e-1, -9.229540995584866883),
    (0.3, 0.5, 7.002604885070546636e-1, -8.080475074774909009e-1),
    (0.3, 1.9, 4.720136451554997255e-1, 3.264495413759295144e-1),
    (0.3, 2.1, 3.775779743649991523e-1, 3.952445297685530235e-1),
    (0.3, 8.68, 1.152376296246975911e-1, 2.449230017249699688e-1),
    (
        0.3,
        17.0,
        -1.933976065593905836e-1,
        -5.939570990923783118e-3,
    ),
    (
        0.3,
        26.03,
        1.462188920691129119e-1,
        -5.544646832146950675e-2,
    ),
    (
        0.3,
        99.0,
        -7.524048645126108579e-2,
        -2.773660883908674275e-2,
    ),
    (
        0.3,
        1000.0,
        2.422639884988774874e-2,
        -7.049916326045269052e-3,
    ),
    (
        0.3,
        10000.0,
        -4.66668522701754567e-3,
        6.471786938532877225e-3,
    ),
    (0.5, 1e-6, 7.978845608027323751e-4, -7.978845608024664136e+2),
    (0.5, 1e-3, 2.523132101498094071e-2, -2.523131260454004169e+1),
    (0.5, 0.5, 5.409737899345280913e-1, -9.9024588024340488e-1),
    (0.5, 1.9, 5.47762303682864742e-1, 1.871349693463030176e-1),
    (0.5, 2.1, 4.752767376437599959e-1, 2.779645574721634287e-1),
    (0.5, 8.68, 1.835638923188645365e-1, 1.99117023843179995e-1),
    (0.5, 17.0, -1.86045249677634374e-1, 5.324835186521795027e-2),
    (0.5, 26.03, 1.222358614090827153e-1, -9.75476819325384655e-2),
    (
        0.5,
        99.0,
        -8.012681128561517266e-2,
        -3.193252947560424046e-3,
    ),
    (
        0.5,
        1000.0,
        2.086326660509382773e-2,
        -1.418956937092729432e-2,
    ),
    (
        0.5,
        10000.0,
        -2.438450024531391541e-3,
        7.597100678194345892e-3,
    ),
    (1.0, 1e-6, 4.999999999999375e-7, -6.366197723721750138e+5),
    (1.0, 1e-3, 4.999999375000026042e-4, -6.366221672311394281e+2),
    (1.0, 0.5, 2.422684576748738864e-1, -1.471472392670243069),
    (1.0, 1.9, 5.811570727134340727e-1, -1.644057723315952626e-1),
    (1.0, 2.1, 5.682921357570386685e-1, -5.167861213042358207e-2),
    (1.0, 8.68, 2.705371981298066269e-1, 2.266404576987592979e-2),
    (1.0, 17.0, -9.766849275778065024e-2, 1.672050360772336865e-1),
    (
        1.0,
        26.03,
        1.969820629683490688e-2,
        -1.551858694545775838e-1,
    ),
    (1.0, 99.0, -5.912294255307406704e-2, 5.417773003347098278e-2),
    (
        1.0,
        1000.0,
        4.728311907089523918e-3,
        -2.478433129235177891e-2,
    ),
    (
        1.0,
        10000.0,
        3.647450755529580344e-3,
        7.096342752536495135e-3,
    ),
    (
        2.5,
        1e-6,
        5.319230405352055761e-17,
        -2.39365368240899501e+15,
    ),
    (2.5, 1e-3, 1.682088227864275654e-9, -7.569398827627056546e+7),
    (2.5, 0.5, 9.2364078193797245e-3, -1.413854742228462223e+1),
    (2.5, 1.9, 2.029180941904098913e-1, -8.965089923250897146e-1),
    (2.5, 2.1, 2.451329959176707499e-1, -7.678397898393284373e-1),
    (
        2.5,
        8.68,
        -1.074354576282653429e-1,
        -2.546322806501531276e-1,
    ),
    (2.5, 17.0, 1.935107520862614064e-1, -1.986408615879924118e-2),
    (2.5, 26.03, -1.3293717386363061e-1, 8.302789269553720903e-2),
    (2.5, 99.0, 8.000551993174492559e-2, 5.620360711358508426e-3),
    (
        2.5,
        1000.0,
        -2.090577272340679433e-2,
        1.412693700240390006e-2,
    ),
    (
        2.5,
        10000.0,
        2.440729081581349109e-3,
        -7.596368915273966129e-3,
    ),
    (
        7.25,
        1e-6,
        2.480100604777264505e-50,
        -1.770283503937247676e+48,
    ),
    (
        7.25,
        1e-3,
        1.394663018433358964e-28,
        -3.148058830905391143e+26,
    ),
    (7.25, 0.5, 5.113407114348451253e-9, -8.607110628480464538e+6),
    (7.25, 1.9, 7.37290633263057152e-5, -6.175846647655276268e+2),
    (7.25, 2.1, 1.486260556994260008e-4, -3.08979174510360196e+2),
    (
        7.25,
        8.68,
        3.328485694023000985e-1,
        -1.090899321751115249e-1,
    ),
    (7.25, 17.0, 2.022649511266300347e-1, 2.088125926352906203e-2),
    (
        7.25,
        26.03,
        -1.063778020751935842e-1,
        1.189150539242459907e-1,
    ),
    (
        7.25,
        99.0,
        5.153485671716677058e-2,
        -6.157831534590773698e-2,
    ),
    (
        7.25,
        1000.0,
        4.477605889194274856e-3,
        2.483117939371620983e-2,
    ),
    (
        7.25,
        10000.0,
        -6.072134454201943893e-3,
        -5.17601942214710006e-3,
    ),
    (
        20.0,
        1e-6,
        3.919904349624744345e-145,
        -4.060174149584327697e+142,
    ),
    (
        20.0,
        1e-3,
        3.919904302959263304e-85,
        -4.060174203007618718e+82,
    ),
    (
        20.0,
        0.5,
        3.727201961704714461e-31,
        -4.271430121565906436e+28,
    ),
    (
        20.0,
        1.9,
        1.411448026784765508e-19,
        -1.132736647258443058e+17,
    ),
    (
        20.0,
        2.1,
        1.034745665848217904e-18,
        -1.546678616385166411e+16,
    ),
    (
        20.0,
        8.68,
        9.241691951063205222e-7,
        -1.912444550210917235e+4,
    ),
    (
        20.0,
        17.0,
        3.618536310859174681e-2,
        -8.666744124870302359e-1,
    ),
    (
        20.0,
        26.03,
        -7.381274778017698654e-2,
        1.801871472735118074e-1,
    ),
    (
        20.0,
        99.0,
        7.763240401855473966e-2,
        -2.321598259794272137e-2,
    ),
    (
        20.0,
        1000.0,
        2.335796793267933459e-2,
        9.547376014987301682e-3,
    ),
    (
        20.0,
        10000.0,
        -7.167699606859770811e-3,
        3.505165734646082374e-3,
    ),
    (
        20.564,
        1e-6,
        1.978348436028939025e-149,
        -7.824196484956199314e+146,
    ),
    (
        20.564,
        1e-3,
        9.73425634594505735e-88,
        -1.590156078434232293e+85,
    ),
    (
        20.564,
        0.5,
        3.080797372872166518e-32,
        -5.025833702128269759e+29,
    ),
    (
        20.564,
        1.9,
        2.479697902056799699e-20,
        -6.269168803559683025e+17,
    ),
    (
        20.564,
        2.1,
        1.923937727644723894e-19,
        -8.087857579869511601e+16,
    ),
    (
        20.564,
        8.68,
        3.916927560359440882e-7,
        -4.36092988596659698e+4,
    ),
    (20.564, 17.0, 2.465844990756144864e-2, -1.150331740993970944),
    (
        20.564,
        26.03,
        -6.679192239287748296e-4,
        1.987212217624031818e-1,
    ),
    (
        20.564,
        99.0,
        3.9626459706231586e-2,
        -7.073554813880605348e-2,
    ),
    (
        20.564,
        1000.0,
        2.230656574432068943e-2,
        -1.179709566872449991e-2,
    ),
    (
        20.564,
        10000.0,
        -1.828196848466957118e-3,
        7.766582777975082541e-3,
    ),
    (
        45.5,
        1e-3,
        7.854608492553636235e-208,
        -8.906645929827900108e+204,
    ),
    (
        45.5,
        0.5,
        4.985124454659335896e-85,
        -1.403424203843237751e+82,
    ),
    (
        45.5,
        1.9,
        1.174850528816416083e-58,
        -5.959849310995574246e+55,
    ),
    (
        45.5,
        2.1,
        1.111227298867262454e-56,
        -6.302300535442691327e+53,
    ),
    (
        45.5,
        8.68,
        8.338640447440840572e-29,
        -8.546686915858122385e+25,
    ),
    (
        45.5,
        17.0,
        4.945631007645694788e-16,
        -1.525070113037125946e+13,
    ),
    (
        45.5,
        26.03,
        1.410592785743817445e-8,
        -6.048451964872655288e+5,
    ),
    (
        45.5,
        99.0,
        8.116113965531413515e-2,
        -2.555455215821708461e-2,
    ),
    (
        45.5,
        1000.0,
        1.070500909011128627e-2,
        -2.286225006270650443e-2,
    ),
    (
        45.5,
        10000.0,
        7.304553971948809123e-3,
        3.210315781870865817e-3,
    ),
    (
        100.0,
        0.5,
        6.663899904277085153e-219,
        -4.776690378041764373e+215,
    ),
    (
        100.0,
        1.9,
        6.287471123381431659e-161,
        -5.063520073257814713e+157,
    ),
    (
        100.0,
        2.1,
        1.39375137488176768e-156,
        -2.284339298282345734e+153,
    ),
    (
        100.0,
        8.68,
        4.987731030742289317e-95,
        -6.4060378906927738e+91,
    ),
    (
        100.0,
        17.0,
        4.572126569017941108e-66,
        -7.064811784811858405e+62,
    ),
    (
        100.0,
        26.03,
        5.494430698784398582e-48,
        -6.000183010818650759e+44,
    ),
    (
        100.0,
        99.0,
        7.768716170045940079e-2,
        -2.010721995738356688e-1,
    ),
    (
        100.0,
        1000.0,
        1.167613500780255449e-2,
        -2.243868825772327406e-2,
    ),
    (
        100.0,
        10000.0,
        -7.976516311393374168e-3,
        -2.00868187651884264e-4,
    ),
    (
        8540.51,
        8675.35,
        -1.644034507726898514e-2,
        1.214236218257296974e-2,
    ),
    (
        8540.51,
        8692.7,
        1.594534661225144729e-2,
        -1.178013140343536857e-2,
    ),
    (
        3688.3,
        8680.0,
        8.82413859487080602e-3,
        -1.776566798227730849e-3,
    ),
    (
        150.0,
        149.5,
        7.697501760608254514e-2,
        -1.585818107718716621e-1,
    ),
    (
        1000.0,
        1200.0,
        3.582667437882888371e-3,
        3.077164087915748539e-2,
    ),
];
