// Reference values generated by gen_oracles.py (mpmath, 50 digits); see to_rust.py.

/// (x, Γ(x))
pub const GAMMA: &[(f64, f64)] = &[
    (0.001, 999.4237724845955),
    (0.1, 9.513507698668732),
    (0.5, 1.772453850905516),
    (1.5, 0.886226925452758),
    (2.5, 1.329340388179137),
    (7.25, 1155.3810139199898),
    (10.3, 716430.6890623752),
    (33.7, 3.0321626547398416e+36),
    (100.5, 9.320963104082716e+156),
    (150.25, 1.3321507761951635e+261),
    (170.5, 5.56209241456e+305),
    (-0.5, -3.544907701811032),
    (-2.3, -1.4471073942559172),
    (-10.7, -2.0163855047883623e-07),
    (-0.001, -1000.5782056293586),
];

/// (α, δ, Re z, Im z, Re E, Im E) for |z| ≤ 5
pub const ML_SMALL: &[(f64, f64, f64, f64, f64, f64)] = &[
    (0.3, 0.5, -0.3, 0.0, 0.377665713035003, 0.0),
    (0.3, 0.5, -1.0, 0.0, 0.1975122103465977, 0.0),
    (0.3, 0.5, -2.5, 0.0, 0.0902185281421513, 0.0),
    (0.3, 0.5, -5.0, 0.0, 0.04551936941185296, 0.0),
    (0.3, 0.5, -2.1213203435596424, 2.1213203435596424, 0.05558726957865503, 0.05497463523537042),
    (0.3, 0.5, 0.0, 4.0, -0.004865012650349199, 0.058625235561230817),
    (0.3, 0.5, 1.5, 2.0, -0.07951059529829357, 0.05182532960247636),
    (0.3, 0.5, 2.0, 0.0, 252353.54226878818, 0.0),
    (0.3, 0.5, 0.7, -0.2, 1.9938905021735946, -1.515243191830588),
    (0.3, 1.0, -0.3, 0.0, 0.7442566731997616, 0.0),
    (0.3, 1.0, -1.0, 0.0, 0.45659440832969067, 0.0),
    (0.3, 1.0, -2.5, 0.0, 0.24498312379478696, 0.0),
    (0.3, 1.0, -5.0, 0.0, 0.13708086902027064, 0.0),
    (0.3, 1.0, -2.1213203435596424, 2.1213203435596424, 0.177519484594478, 0.13480275703189126),
    (0.3, 1.0, 0.0, 4.0, 0.02879934662553223, 0.1906732993913477),
    (0.3, 1.0, 1.5, 2.0, -0.1620282427360736, 0.32425132284919744),
    (0.3, 1.0, 2.0, 0.0, 79485.90762518356, 0.0),
    (0.3, 1.0, 0.7, -0.2, 2.6261823616568676, -1.3785893701138703),
    (0.3, 1.7, -0.3, 0.0, 0.8624121173098412, 0.0),
    (0.3, 1.7, -1.0, 0.0, 0.5681831378977588, 0.0),
    (0.3, 1.7, -2.5, 0.0, 0.32548058842852184, 0.0),
    (0.3, 1.7, -5.0, 0.0, 0.1894082431639143, 0.0),
    (0.3, 1.7, -2.1213203435596424, 2.1213203435596424, 0.2494349260055967, 0.17067382898368388),
    (0.3, 1.7, 0.0, 4.0, 0.06347319336558727, 0.26857323839753255),
    (0.3, 1.7, 1.5, 2.0, -0.15876820708682185, 0.5314864769112391),
    (0.3, 1.7, 2.0, 0.0, 15771.127448322366, 0.0),
    (0.3, 1.7, 0.7, -0.2, 2.421101329883176, -0.9402142523754441),
    (0.5, 0.5, -0.3, 0.0, 0.34380978317745975, 0.0),
    (0.5, 0.5, -1.0, 0.0, 0.13660600739194928, 0.0),
    (0.5, 0.5, -2.5, 0.0, 0.037173673394897334, 0.0),
    (0.5, 0.5, -5.0, 0.0, 0.010666394882413156, 0.0),
    (0.5, 0.5, -2.1213203435596424, 2.1213203435596424, 0.00477492327006932, 0.03009923249433724),
    (0.5, 0.5, 0.0, 4.0, -0.019624776052854846, 4.5014069887703647e-07),
    (0.5, 0.5, 1.5, 2.0, 0.6926024029345702, 0.4764707458327553),
    (0.5, 0.5, 2.0, 0.0, 218.4459983635037, 0.0),
    (0.5, 0.5, 0.7, -0.2, 2.124305287202216, -1.1605648307273546),
    (0.5, 1.0, -0.3, 0.0, 0.7345993345676551, 0.0),
    (0.5, 1.0, -1.0, 0.0, 0.427583576155807, 0.0),
    (0.5, 1.0, -2.5, 0.0, 0.2108063640611436, 0.0),
    (0.5, 1.0, -5.0, 0.0, 0.11070463773306863, 0.0),
    (0.5, 1.0, -2.1213203435596424, 2.1213203435596424, 0.13894975706092585, 0.12476084279075496),
    (0.5, 1.0, 0.0, 4.0, 1.1253517471925912e-07, 0.14595358990015278),
    (0.5, 1.0, 1.5, 2.0, 0.18328971531931704, 0.07326087679608079),
    (0.5, 1.0, 2.0, 0.0, 108.94090438997797, 0.0),
    (0.5, 1.0, 0.7, -0.2, 2.4984791673652693, -0.9440985675061441),
    (0.5, 1.7, -0.3, 0.0, 0.8770619960913997, 0.0),
    (0.5, 1.7, -1.0, 0.0, 0.5823498522901579, 0.0),
    (0.5, 1.7, -2.5, 0.0, 0.32990263786439644, 0.0),
    (0.5, 1.7, -5.0, 0.0, 0.18905213968830384, 0.0),
    (0.5, 1.7, -2.1213203435596424, 2.1213203435596424, 0.24881441755271685, 0.17758604320618493),
    (0.5, 1.7, 0.0, 4.0, 0.04913874283783172, 0.2686837028044064),
    (0.5, 1.7, 1.5, 2.0, -0.22104101495110723, 0.37918538374605154),
    (0.5, 1.7, 2.0, 0.0, 40.62851309222733, 0.0),
    (0.5, 1.7, 0.7, -0.2, 2.165249418326737, -0.5809316224757396),
    (0.8, 0.5, -0.3, 0.0, 0.30289444008633404, 0.0),
    (0.8, 0.5, -1.0, 0.0, 0.03270086451789555, 0.0),
    (0.8, 0.5, -2.5, 0.0, -0.06231149684965392, 0.0),
    (0.8, 0.5, -5.0, 0.0, -0.0458849995290877, 0.0),
    (0.8, 0.5, -2.1213203435596424, 2.1213203435596424, -0.09301039305122713, -0.04033265003472792),
    (0.8, 0.5, 0.0, 4.0, 0.34898460600459286, -0.08386504409871484),
    (0.8, 0.5, 1.5, 2.0, -7.344916290777219, -2.499455079096449),
    (0.8, 0.5, 2.0, 0.0, 20.88553068442194, 0.0),
    (0.8, 0.5, 0.7, -0.2, 1.9480286008436998, -0.72935851111046),
    (0.8, 1.0, -0.3, 0.0, 0.7327464025685766, 0.0),
    (0.8, 1.0, -1.0, 0.0, 0.38694857861897686, 0.0),
    (0.8, 1.0, -2.5, 0.0, 0.14341738258439232, 0.0),
    (0.8, 1.0, -5.0, 0.0, 0.057595384762152244, 0.0),
    (0.8, 1.0, -2.1213203435596424, 2.1213203435596424, 0.04937460142165748, 0.10478473355334758),
    (0.8, 1.0, 0.0, 4.0, 0.055559140224006626, -0.075855440263915),
    (0.8, 1.0, 1.5, 2.0, -4.300164195741698, 1.1724419880361792),
    (0.8, 1.0, 2.0, 0.0, 13.415748887819015, 0.0),
    (0.8, 1.0, 0.7, -0.2, 2.170407969715674, -0.5494644821622532),
    (0.8, 1.7, -0.3, 0.0, 0.904808200672296, 0.0),
    (0.8, 1.7, -1.0, 0.0, 0.6115852988331756, 0.0),
    (0.8, 1.7, -2.5, 0.0, 0.3335251601028908, 0.0),
    (0.8, 1.7, -5.0, 0.0, 0.18024786943143298, 0.0),
    (0.8, 1.7, -2.1213203435596424, 2.1213203435596424, 0.23541998910380194, 0.19822741593969817),
    (0.8, 1.7, 0.0, 4.0, -0.027172936013464485, 0.20915491469103756),
    (0.8, 1.7, 1.5, 2.0, -1.1704277221892962, 2.041214773295408),
    (0.8, 1.7, 2.0, 0.0, 6.873647067479205, 0.0),
    (0.8, 1.7, 0.7, -0.2, 1.839252870740782, -0.31234786993392394),
    (1.0, 0.5, -0.3, 0.0, 0.285906619742223, 0.0),
    (1.0, 0.5, -1.0, 0.0, -0.042968122293637445, 0.0),
    (1.0, 0.5, -2.5, 0.0, -0.1587971963692199, 0.0),
    (1.0, 0.5, -5.0, 0.0, -0.08860647588682764, 0.0),
    (1.0, 0.5, -2.1213203435596424, 2.1213203435596424, -0.23399996222802233, -0.13412729661431258),
    (1.0, 0.5, 0.0, 4.0, 0.16519057517903674, -2.055203177288073),
    (1.0, 0.5, 1.5, 2.0, -5.455326127352349, 4.394158048378216),
    (1.0, 0.5, 2.0, 0.0, 10.538428671807383, 0.0),
    (1.0, 0.5, 0.7, -0.2, 1.7817916806655567, -0.5484466939433678),
    (1.0, 1.0, -0.3, 0.0, 0.7408182206817179, 0.0),
    (1.0, 1.0, -1.0, 0.0, 0.36787944117144233, 0.0),
    (1.0, 1.0, -2.5, 0.0, 0.0820849986238988, 0.0),
    (1.0, 1.0, -5.0, 0.0, 0.006737946999085467, 0.0),
    (1.0, 1.0, -2.1213203435596424, 2.1213203435596424, -0.06270976014784302, 0.10216203831482164),
    (1.0, 1.0, 0.0, 4.0, -0.6536436208636119, -0.7568024953079282),
    (1.0, 1.0, 1.5, 2.0, -1.8650407290090891, 4.075188339491184),
    (1.0, 1.0, 2.0, 0.0, 7.38905609893065, 0.0),
    (1.0, 1.0, 0.7, -0.2, 1.9736117246291247, -0.40007090277990226),
    (1.0, 1.7, -0.3, 0.0, 0.9262688973456199, 0.0),
    (1.0, 1.7, -1.0, 0.0, 0.6398223241687431, 0.0),
    (1.0, 1.7, -2.5, 0.0, 0.3365180991620251, 0.0),
    (1.0, 1.7, -5.0, 0.0, 0.16650757861150095, 0.0),
    (1.0, 1.7, -2.1213203435596424, 2.1213203435596424, 0.21879058928594225, 0.23282483544228516),
    (1.0, 1.7, 0.0, 4.0, -0.38071215730211416, 0.2795431243835486),
    (1.0, 1.7, 1.5, 2.0, 0.32843844719601295, 2.521842126084378),
    (1.0, 1.7, 2.0, 0.0, 4.201661652946932, 0.0),
    (1.0, 1.7, 0.7, -0.2, 1.6801865541685763, -0.21916542053449783),
    (1.3, 0.5, -0.3, 0.0, 0.2804862289269201, 0.0),
    (1.3, 0.5, -1.0, 0.0, -0.14060097185201254, 0.0),
    (1.3, 0.5, -2.5, 0.0, -0.3918907435634047, 0.0),
    (1.3, 0.5, -5.0, 0.0, -0.21414726071946352, 0.0),
    (1.3, 0.5, -2.1213203435596424, 2.1213203435596424, -0.7163505765931787, -0.10450830556274836),
    (1.3, 0.5, 0.0, 4.0, -3.6058031076260386, -0.7034002955300438),
    (1.3, 0.5, 1.5, 2.0, -0.5049123853297975, 4.979443816886015),
    (1.3, 0.5, 2.0, 0.0, 5.593844893941227, 0.0),
    (1.3, 0.5, 0.7, -0.2, 1.5478385072932104, -0.374131448054865),
    (1.3, 1.0, -0.3, 0.0, 0.7658201696548985, 0.0),
    (1.3, 1.0, -1.0, 0.0, 0.36894184906938254, 0.0),
    (1.3, 1.0, -2.5, 0.0, -0.030871912177858882, 0.0),
    (1.3, 1.0, -5.0, 0.0, -0.13275950847306692, 0.0),
    (1.3, 1.0, -2.1213203435596424, 2.1213203435596424, -0.2835132224406766, 0.253185190066071),
    (1.3, 1.0, 0.0, 4.0, -1.9420314146514852, 0.8441130311380686),
    (1.3, 1.0, 1.5, 2.0, 0.9171781754666717, 3.4128660162587146),
    (1.3, 1.0, 2.0, 0.0, 4.2917217536157315, 0.0),
    (1.3, 1.0, 0.7, -0.2, 1.7343245526805189, -0.26219017063019584),
    (1.3, 1.7, -0.3, 0.0, 0.9602853621787991, 0.0),
    (1.3, 1.7, -1.0, 0.0, 0.6987770370067148, 0.0),
    (1.3, 1.7, -2.5, 0.0, 0.3567622361958423, 0.0),
    (1.3, 1.7, -5.0, 0.0, 0.1287531370122232, 0.0),
    (1.3, 1.7, -2.1213203435596424, 2.1213203435596424, 0.23664529337365614, 0.3372076570186197),
    (1.3, 1.7, 0.0, 4.0, -0.31089194820599364, 1.0886520006356413),
    (1.3, 1.7, 1.5, 2.0, 1.3610379326522744, 1.7176229676951142),
    (1.3, 1.7, 2.0, 0.0, 2.7138277543988174, 0.0),
    (1.3, 1.7, 0.7, -0.2, 1.5057842563883248, -0.1367153178251052),
    (1.7, 0.5, -0.3, 0.0, 0.3084594292516813, 0.0),
    (1.7, 0.5, -1.0, 0.0, -0.1701946466467687, 0.0),
    (1.7, 0.5, -2.5, 0.0, -0.7508361797865758, 0.0),
    (1.7, 0.5, -5.0, 0.0, -0.8649256531835466, 0.0),
    (1.7, 0.5, -2.1213203435596424, 2.1213203435596424, -1.1104235848329196, 0.5332843727137091),
    (1.7, 0.5, 0.0, 4.0, -2.255978730178898, 2.615919563871637),
    (1.7, 0.5, 1.5, 2.0, 1.331786098367828, 3.0177585884108877),
    (1.7, 0.5, 2.0, 0.0, 3.2775915125520974, 0.0),
    (1.7, 0.5, 0.7, -0.2, 1.288734758303058, -0.2392072176274992),
    (1.7, 1.0, -0.3, 0.0, 0.8144777458355186, 0.0),
    (1.7, 1.0, -1.0, 0.0, 0.44454443263222343, 0.0),
    (1.7, 1.0, -2.5, 0.0, -0.1007411017923868, 0.0),
    (1.7, 1.0, -5.0, 0.0, -0.4865903225557478, 0.0),
    (1.7, 1.0, -2.1213203435596424, 2.1213203435596424, -0.2618286957452255, 0.6180908771597816),
    (1.7, 1.0, 0.0, 4.0, -0.5034091224835642, 2.148789006465827),
    (1.7, 1.0, 1.5, 2.0, 1.6859722318372274, 1.9182524903476854),
    (1.7, 1.0, 2.0, 0.0, 2.7505676117972975, 0.0),
    (1.7, 1.0, 0.7, -0.2, 1.4994175536957137, -0.1591842284721399),
    (1.7, 1.7, -0.3, 0.0, 1.0030853470343684, 0.0),
    (1.7, 1.7, -1.0, 0.0, 0.7989701443661196, 0.0),
    (1.7, 1.7, -2.5, 0.0, 0.45687652361655606, 0.0),
    (1.7, 1.7, -5.0, 0.0, 0.10622602936504834, 0.0),
    (1.7, 1.7, -2.1213203435596424, 2.1213203435596424, 0.4219567258529751, 0.42751661204569946),
    (1.7, 1.7, 0.0, 4.0, 0.5458329222677238, 1.2146514301370035),
    (1.7, 1.7, 1.5, 2.0, 1.5092430560546968, 0.8950817184963333),
    (1.7, 1.7, 2.0, 0.0, 1.9319305379271012, 0.0),
    (1.7, 1.7, 0.7, -0.2, 1.3519928183049035, -0.0777055901650693),
    (1.95, 0.5, -0.3, 0.0, 0.33934027453892307, 0.0),
    (1.95, 0.5, -1.0, 0.0, -0.12027331383307606, 0.0),
    (1.95, 0.5, -2.5, 0.0, -0.8327556176757417, 0.0),
    (1.95, 0.5, -5.0, 0.0, -1.3672566512363786, 0.0),
    (1.95, 0.5, -2.1213203435596424, 2.1213203435596424, -1.0095007624378978, 0.8502946022965984),
    (1.95, 0.5, 0.0, 4.0, -0.9868072613018766, 2.825996471513086),
    (1.95, 0.5, 1.5, 2.0, 1.4896639560134586, 2.1718579994466127),
    (1.95, 0.5, 2.0, 0.0, 2.5542676267086035, 0.0),
    (1.95, 0.5, 0.7, -0.2, 1.1548564476538217, -0.18468694263568336),
    (1.95, 1.0, -0.3, 0.0, 0.8473004248886625, 0.0),
    (1.95, 1.0, -1.0, 0.0, 0.5232367458946172, 0.0),
    (1.95, 1.0, -2.5, 0.0, -0.03322045893300638, 0.0),
    (1.95, 1.0, -5.0, 0.0, -0.6143859692027395, 0.0),
    (1.95, 1.0, -2.1213203435596424, 2.1213203435596424, -0.07812726246868942, 0.7096983419291183),
    (1.95, 1.0, 0.0, 4.0, 0.23553429085206548, 1.976391139605797),
    (1.95, 1.0, 1.5, 2.0, 1.6722432207599982, 1.3462652080244273),
    (1.95, 1.0, 2.0, 0.0, 2.2555545012588283, 0.0),
    (1.95, 1.0, 0.7, -0.2, 1.38859871416739, -0.11875272177510893),
    (1.95, 1.7, -0.3, 0.0, 1.0257723728944395, 0.0),
    (1.95, 1.7, -1.0, 0.0, 0.8622363828968467, 0.0),
    (1.95, 1.7, -2.5, 0.0, 0.5596273836461301, 0.0),
    (1.95, 1.7, -5.0, 0.0, 0.18065405481159058, 0.0),
    (1.95, 1.7, -2.1213203435596424, 2.1213203435596424, 0.5701533407042972, 0.4020118458635134),
    (1.95, 1.7, 0.0, 4.0, 0.8427555741738859, 0.9853949491667705),
    (1.95, 1.7, 1.5, 2.0, 1.445871652497471, 0.6081172224851702),
    (1.95, 1.7, 2.0, 0.0, 1.6777072470756038, 0.0),
    (1.95, 1.7, 0.7, -0.2, 1.2858410014712485, -0.055505724063000174),
];

/// (α, δ, Re z, Im z, Re E, Im E) for |z| ≥ 10 inside the decay sector
pub const ML_LARGE: &[(f64, f64, f64, f64, f64, f64)] = &[
    (0.3, 0.5, -10.0, 0.0, 0.02247280492110131, 0.0),
    (0.3, 0.5, 4.186597375374281, 9.081431738250814, -0.009989618002181847, 0.019166267853396375),
    (0.3, 0.5, -50.0, 0.0, 0.004391817437026719, 0.0),
    (0.3, 0.5, 20.932986876871404, 45.40715869125407, -0.0018502737757538324, 0.003928481028620888),
    (0.3, 0.5, -200.0, 0.0, 0.0010914304388516649, 0.0),
    (0.3, 0.5, 83.73194750748561, 181.62863476501627, -0.00045752423098130456, 0.0009873112372525581),
    (0.3, 0.5, -1000.0, 0.0, 0.0002179181937157602, 0.0),
    (0.3, 0.5, 418.6597375374281, 908.1431738250812, -9.125554137356918e-05, 0.00019774509765443297),
    (0.3, 1.0, -10.0, 0.0, 0.07264972907277209, 0.0),
    (0.3, 1.0, 4.186597375374281, 9.081431738250814, -0.029223994131359506, 0.0733798394777619),
    (0.3, 1.0, -50.0, 0.0, 0.015228201501814696, 0.0),
    (0.3, 1.0, 20.932986876871404, 45.40715869125407, -0.006332647874492098, 0.014129287743889427),
    (0.3, 1.0, -200.0, 0.0, 0.003840658560053858, 0.0),
    (0.3, 1.0, 83.73194750748561, 181.62863476501627, -0.0016053098055531236, 0.003506657923572713),
    (0.3, 1.0, -1000.0, 0.0, 0.0007699324649525777, 0.0),
    (0.3, 1.0, 418.6597375374281, 908.1431738250812, -0.0003222355335239251, 0.0006999610107062776),
    (0.3, 2.0, -10.0, 0.0, 0.09975479604448187, 0.0),
    (0.3, 2.0, 4.186597375374281, 9.081431738250814, -0.0377355879433198, 0.10814250872556606),
    (0.3, 2.0, -50.0, 0.0, 0.021568397368757573, 0.0),
    (0.3, 2.0, 20.932986876871404, 45.40715869125407, -0.008914197498319242, 0.02032948238383441),
    (0.3, 2.0, -200.0, 0.0, 0.005474691372218486, 0.0),
    (0.3, 2.0, 83.73194750748561, 181.62863476501627, -0.0022853487171507945, 0.005018662460800845),
    (0.3, 2.0, -1000.0, 0.0, 0.0010994213953043127, 0.0),
    (0.3, 2.0, 418.6597375374281, 908.1431738250812, -0.0004600219088970544, 0.001000311351153704),
    (0.5, 0.5, -10.0, 0.0, 0.0027796561095304283, 0.0),
    (0.5, 0.5, 1.9509032201612826, 9.807852804032304, -0.002636540829889316, -0.0011104666650264957),
    (0.5, 0.5, -50.0, 0.0, 0.00011277028156766193, 0.0),
    (0.5, 0.5, 9.754516100806413, 49.039264020161525, -0.0001042965407214711, -4.3229136985112146e-05),
    (0.5, 0.5, -200.0, 0.0, 7.0521053470072114e-06, 0.0),
    (0.5, 0.5, 39.01806440322565, 196.1570560806461, -6.515727119217293e-06, -2.699012098674756e-06),
    (0.5, 0.5, -1000.0, 0.0, 2.8209436863274835e-07, 0.0),
    (0.5, 0.5, 195.09032201612825, 980.7852804032304, -2.6062190355503447e-07, -1.0795330237603061e-07),
    (0.5, 1.0, -10.0, 0.0, 0.05614099274382259, 0.0),
    (0.5, 1.0, 1.9509032201612826, 9.807852804032304, -0.01116714204914253, 0.05557180780383373),
    (0.5, 1.0, -50.0, 0.0, 0.011281536265323773, 0.0),
    (0.5, 1.0, 9.754516100806413, 49.039264020161525, -0.0022026134655886227, 0.011068853956522993),
    (0.5, 1.0, -200.0, 0.0, 0.0028209126572120466, 0.0),
    (0.5, 1.0, 39.01806440322565, 196.1570560806461, -0.0005503592291955848, 0.002766773514392891),
    (0.5, 1.0, -1000.0, 0.0, 0.0005641893014533876, 0.0),
    (0.5, 1.0, 195.09032201612825, 980.7852804032304, -0.00011006808425629811, 0.0005533490734539502),
    (0.5, 2.0, -10.0, 0.0, 0.10339932663698949, 0.0),
    (0.5, 2.0, 1.9509032201612826, 9.807852804032304, -0.012458955140093016, 0.1140259203480891),
    (0.5, 2.0, -50.0, 0.0, 0.02217209595641638, 0.0),
    (0.5, 2.0, 9.754516100806413, 49.039264020161525, -0.00403065696168524, 0.022283273575389714),
    (0.5, 2.0, -200.0, 0.0, 0.005616966358293994, 0.0),
    (0.5, 2.0, 39.01806440322565, 196.1570560806461, -0.0010775431054116775, 0.005542996836012252),
    (0.5, 2.0, -1000.0, 0.0, 0.001127379731284814, 0.0),
    (0.5, 2.0, 195.09032201612825, 980.7852804032304, -0.0002192116620852699, 0.00110707989212665),
    (0.8, 0.5, -10.0, 0.0, -0.02380734148283159, 0.0),
    (0.8, 0.5, -1.5643446504023093, 9.876883405951377, -0.002879247118802899, -0.02337722806488872),
    (0.8, 0.5, -50.0, 0.0, -0.004661851076992445, 0.0),
    (0.8, 0.5, -7.821723252011546, 49.38441702975689, -0.0006844336377859339, -0.004579487833915183),
    (0.8, 0.5, -200.0, 0.0, -0.001158125016242803, 0.0),
    (0.8, 0.5, -31.286893008046185, 197.53766811902756, -0.00017833393025832347, -0.0011421633598795676),
    (0.8, 0.5, -1000.0, 0.0, -0.00023121770999711154, 0.0),
    (0.8, 0.5, -156.43446504023092, 987.6883405951377, -3.605652747446137e-05, -0.0002283015161988455),
    (0.8, 1.0, -10.0, 0.0, 0.024902819761976534, 0.0),
    (0.8, 1.0, -1.5643446504023093, 9.876883405951377, 0.0006654439518318184, 0.022038253945504276),
    (0.8, 1.0, -50.0, 0.0, 0.0044677761579029925, 0.0),
    (0.8, 1.0, -7.821723252011546, 49.38441702975689, 0.0005772972465279474, 0.004333573665642727),
    (0.8, 1.0, -200.0, 0.0, 0.0010959340727899076, 0.0),
    (0.8, 1.0, -31.286893008046185, 197.53766811902756, 0.00016392409615101244, 0.001077763128501574),
    (0.8, 1.0, -1000.0, 0.0, 0.00021809575522748381, 0.0),
    (0.8, 1.0, -156.43446504023092, 987.6883405951377, 3.381789330574863e-05, 0.00021522635050761678),
    (0.8, 2.0, -10.0, 0.0, 0.10411641940370937, 0.0),
    (0.8, 2.0, -1.5643446504023093, 9.876883405951377, 0.0214333116619621, 0.10643049060606888),
    (0.8, 2.0, -50.0, 0.0, 0.021599977004151782, 0.0),
    (0.8, 2.0, -7.821723252011546, 49.38441702975689, 0.0035799844608684077, 0.021460518945942787),
    (0.8, 2.0, -200.0, 0.0, 0.005434317796236691, 0.0),
    (0.8, 2.0, -31.286893008046185, 197.53766811902756, 0.0008626171017626025, 0.005375124643715181),
    (0.8, 2.0, -1000.0, 0.0, 0.001088673328051009, 0.0),
    (0.8, 2.0, -156.43446504023092, 987.6883405951377, 0.00017080547723883542, 0.0010755764192450158),
    (1.3, 0.5, -10.0, 0.0, 0.005442767007837634, 0.0),
    (1.3, 0.5, -6.788007455329418, 7.343225094356855, 0.4924214920700474, 0.17692747070443518),
    (1.3, 0.5, -50.0, 0.0, -0.003372277682541036, 0.0),
    (1.3, 0.5, -33.94003727664709, 36.716125471784274, -0.01652130452233968, 0.04463832506907984),
    (1.3, 0.5, -200.0, 0.0, -0.0008655002187994014, 0.0),
    (1.3, 0.5, -135.76014910658836, 146.8645018871371, -0.0006007993292813717, -0.0006103857426129273),
    (1.3, 0.5, -1000.0, 0.0, -0.00017404065530093706, 0.0),
    (1.3, 0.5, -678.8007455329417, 734.3225094356854, -0.0001183071433401694, -0.00012774557717712705),
    (1.3, 1.0, -10.0, 0.0, -0.04067009299262164, 0.0),
    (1.3, 1.0, -6.788007455329418, 7.343225094356855, 0.17814545649238447, -0.13711653337764218),
    (1.3, 1.0, -50.0, 0.0, -0.004798038492797232, 0.0),
    (1.3, 1.0, -33.94003727664709, 36.716125471784274, 0.0030417688449728532, 0.005445018853067453),
    (1.3, 1.0, -200.0, 0.0, -0.0011664556086413381, 0.0),
    (1.3, 1.0, -135.76014910658836, 146.8645018871371, -0.0007818023531645466, -0.0008565682439554074),
    (1.3, 1.0, -1000.0, 0.0, -0.00023154826146248248, 0.0),
    (1.3, 1.0, -678.8007455329417, 734.3225094356854, -0.00015684664417538215, -0.00017014469465999628),
    (1.3, 2.0, -10.0, 0.0, 0.07996094852117352, 0.0),
    (1.3, 2.0, -6.788007455329418, 7.343225094356855, 0.02603907656396435, 0.031700947593419265),
    (1.3, 2.0, -50.0, 0.0, 0.015517010254761666, 0.0),
    (1.3, 2.0, -33.94003727664709, 36.716125471784274, 0.010820348916583473, 0.011032429029344025),
    (1.3, 2.0, -200.0, 0.0, 0.003858699789878286, 0.0),
    (1.3, 2.0, -135.76014910658836, 146.8645018871371, 0.0026141769133272608, 0.0028352657788711685),
    (1.3, 2.0, -1000.0, 0.0, 0.0007706538566624972, 0.0),
    (1.3, 2.0, -678.8007455329417, 734.3225094356854, 0.0005229153170855511, 0.000565979484998794),
    (1.7, 0.5, -10.0, 0.0, -0.029305021398698606, 0.0),
    (1.7, 0.5, -9.381913359224841, 3.46117057077493, -0.05293522766090481, -0.6948630458569848),
    (1.7, 0.5, -50.0, 0.0, -0.10457070219763101, 0.0),
    (1.7, 0.5, -46.9095667961242, 17.30585285387465, -0.20923574110129717, -0.9009095976633007),
    (1.7, 0.5, -200.0, 0.0, -0.008256081088305658, 0.0),
    (1.7, 0.5, -187.6382671844968, 69.2234114154986, -0.129857932502172, -0.5704568541246168),
    (1.7, 0.5, -1000.0, 0.0, 0.00020768503373767874, 0.0),
    (1.7, 0.5, -938.1913359224841, 346.11705707749303, -0.053202275036184174, 0.05951337476572852),
    (1.7, 1.0, -10.0, 0.0, -0.3569938323727491, 0.0),
    (1.7, 1.0, -9.381913359224841, 3.46117057077493, -0.4465510092834023, -0.2753100858835693),
    (1.7, 1.0, -50.0, 0.0, -0.07962286673713104, 0.0),
    (1.7, 1.0, -46.9095667961242, 17.30585285387465, -0.261865297177748, -0.15531248475196677),
    (1.7, 1.0, -200.0, 0.0, -0.0034949002776333607, 0.0),
    (1.7, 1.0, -187.6382671844968, 69.2234114154986, -0.1076963491320014, -0.062231266747127846),
    (1.7, 1.0, -1000.0, 0.0, -0.00023297266777740425, 0.0),
    (1.7, 1.0, -938.1913359224841, 346.11705707749303, 0.0007037296297901803, 0.01035522011095075),
    (1.7, 2.0, -10.0, 0.0, -0.0014205257363860977, 0.0),
    (1.7, 2.0, -9.381913359224841, 3.46117057077493, -0.03679914212822125, 0.07746432754089613),
    (1.7, 2.0, -50.0, 0.0, 0.00728474622512226, 0.0),
    (1.7, 2.0, -46.9095667961242, 17.30585285387465, -0.006655305758426468, 0.02828600351964025),
    (1.7, 2.0, -200.0, 0.0, 0.0017194871611398103, 0.0),
    (1.7, 2.0, -187.6382671844968, 69.2234114154986, -0.0008441747736229523, 0.005475282127228743),
    (1.7, 2.0, -1000.0, 0.0, 0.00033389550053965564, 0.0),
    (1.7, 2.0, -938.1913359224841, 346.11705707749303, 0.0004911933147865698, 8.721009300477092e-05),
    (1.95, 0.5, -10.0, 0.0, -0.9585768024204205, 0.0),
    (1.95, 0.5, -9.982656101847159, 0.5887080365118909, -0.9666974666026336, -0.11461022815515688),
    (1.95, 0.5, -50.0, 0.0, -0.7623306433793337, 0.0),
    (1.95, 0.5, -49.9132805092358, 2.9435401825594543, -0.7725448548326712, 0.4413006813451062),
    (1.95, 0.5, -200.0, 0.0, -2.114346832726131, 0.0),
    (1.95, 0.5, -199.6531220369432, 11.774160730237817, -2.3425007426185425, -0.22607614832144377),
    (1.95, 0.5, -1000.0, 0.0, -1.0751765392935624, 0.0),
    (1.95, 0.5, -998.2656101847159, 58.870803651189085, -1.7069265622465346, -1.3243263003508756),
    (1.95, 1.0, -10.0, 0.0, -0.8967771310756538, 0.0),
    (1.95, 1.0, -9.982656101847159, 0.5887080365118909, -0.9012546950335188, -0.013513018844261433),
    (1.95, 1.0, -50.0, 0.0, 0.3128338002059443, 0.0),
    (1.95, 1.0, -49.9132805092358, 2.9435401825594543, 0.32178396974084134, 0.15936170256946108),
    (1.95, 1.0, -200.0, 0.0, -0.4653715231377066, 0.0),
    (1.95, 1.0, -199.6531220369432, 11.774160730237817, -0.5151488572661516, 0.13747119122594717),
    (1.95, 1.0, -1000.0, 0.0, -0.25504420325020133, 0.0),
    (1.95, 1.0, -998.2656101847159, 58.870803651189085, -0.40698286150867286, -0.0011787290188745897),
    (1.95, 2.0, -10.0, 0.0, -0.015792626817987886, 0.0),
    (1.95, 2.0, -9.982656101847159, 0.5887080365118909, -0.01639971098293742, 0.026651407058197542),
    (1.95, 2.0, -50.0, 0.0, 0.0923494615613771, 0.0),
    (1.95, 2.0, -49.9132805092358, 2.9435401825594543, 0.0948488245358473, -0.0067249776251971476),
    (1.95, 2.0, -200.0, 0.0, 0.02178720885214434, 0.0),
    (1.95, 2.0, -199.6531220369432, 11.774160730237817, 0.023595052729256664, 0.015232265646793697),
    (1.95, 2.0, -1000.0, 0.0, 0.0006026284234356173, 0.0),
    (1.95, 2.0, -998.2656101847159, 58.870803651189085, 0.0004535366159233072, 0.009197367906012548),
];

/// (Re z, Im z, Re, Im) of exp(z²)·erfc(−z) = E_{1/2}(z)
pub const ERFC_HALF: &[(f64, f64, f64, f64)] = &[
    (-1.0, 0.0, 0.427583576155807, 0.0),
    (-7.5, 0.0, 0.07457369306287669, 0.0),
    (-300.0, 0.0, 0.0018806214973780646, 0.0),
    (0.0, 40.0, 0.0, 0.014109151458534102),
    (-2.853169548885461, 0.927050983124842, 0.1728850557391925, 0.05107631610077764),
];

/// Σ multinomial(k; l) z^l / Γ(b + a·l) for a = [0.3, 0.6], b = 0.9, z = [-0.5, -0.25].
pub const MULTINOMIAL_2: f64 = 0.4722666085868173;
/// Same for a = [0.2, 0.45, 0.7], b = 1, z = [-0.4, 0.3, -0.2].
pub const MULTINOMIAL_3: f64 = 0.7561281849261131;
