"""Chebyshev coefficients for the Bessel auxiliary functions.

Generated by scripts/fit_bessel.py; do not edit by hand.
"""

J0_SMALL = (
    0.1577279714748901195638,
    -0.008723442352852221290793,
    0.2651786132033368098671,
    -0.3700949938726497790334,
    0.1580671023320972612777,
    -0.03489376941140888516317,
    0.004819180069467604496778,
    -0.0004606261662062750475036,
    0.00003246032882100508080626,
    -0.00000176194690776215074946,
    7.608163592418781866974e-8,
    -2.679253530557672898335e-9,
    7.84869631447946441653e-11,
    -1.943834686737016570621e-12,
    4.125320595634373932613e-14,
    -7.58850812544754633762e-16,
    1.221851587396141103442e-17,
    -1.736789607700236768294e-19,
)

J1_SMALL = (
    0.08104484632565811510459,
    -0.1489751450676521090634,
    0.1609992623572097025478,
    -0.08268049176681790659661,
    0.02221363965496603541029,
    -0.003646940600769275957752,
    0.0004050337728354821833071,
    -0.00003255554866857258516808,
    0.000001985877404991516741381,
    -9.521984756750436182115e-8,
    3.687133759097148238533e-9,
    -1.178026622695884839822e-10,
    3.16015458034800332149e-12,
    -7.221755239651773428461e-14,
    1.42321440035139423163e-15,
    -2.444197291619046389321e-17,
    3.691268299792933262153e-19,
)

Y0_SMALL = (
    -0.03314611320328494165569,
    -0.2744743055297452652878,
    0.1790343140771826629884,
    0.2615673462550466367958,
    -0.1773020127811435821171,
    0.04719668959576338687455,
    -0.007287962479552079179405,
    0.0007531135932577742280742,
    -0.00005632079141056986975138,
    0.000003206532537654800979257,
    -1.440723327401869947892e-7,
    5.248794787330516123188e-9,
    -1.583755254181201512249e-10,
    4.026330818306120753086e-12,
    -8.747341203310769554398e-14,
    1.643489871491946903776e-15,
    -2.69778811525668356322e-17,
    3.90325841734759827069e-19,
)

Y1_SMALL = (
    0.002538013235741781730296,
    -0.01608717304766875017291,
    -0.09591204536083074247243,
    0.08445197259652345836767,
    -0.02832812394459436555433,
    0.005289897544167113014128,
    -0.0006414551451326355987351,
    0.0000550598287333874383764,
    -0.000003538080018689349901705,
    1.770780455615440341013e-7,
    -7.110550049899279781929e-9,
    2.344337905911516394656e-10,
    -6.465151841411594241826e-12,
    1.51429151205001995451e-13,
    -3.051185969447325274002e-15,
    5.346680385728670123059e-17,
    -8.224911372021584629423e-19,
    1.11985183336822377594e-20,
)

P0_LARGE = (
    0.9994603493475186653713,
    -0.0005365220468132117424718,
    0.000003075184787519474621935,
    -5.170594537606097701043e-8,
    1.630646463515138309475e-9,
    -7.864091377237069999006e-11,
    5.168262387349192462197e-12,
    -4.304578869925391222354e-13,
    4.326595743154940564186e-14,
    -5.06903409593523607751e-15,
    6.748072215733873704066e-16,
    -1.001151372346778583388e-16,
    1.630591923374418473609e-17,
    -2.880866169482871201997e-18,
    5.468082783259038368811e-19,
    -1.106203649682971661113e-19,
)

Q0_LARGE = (
    -0.01555585460533700909959,
    0.00006838519942611649599395,
    -7.414498411060647264542e-7,
    1.797245724796899178446e-8,
    -7.271915936866319979411e-10,
    4.220121904668738443819e-11,
    -3.206747420996634744616e-12,
    3.006145125351706311204e-13,
    -3.336328185322426996972e-14,
    4.255225040245461123208e-15,
    -6.099930131640050009801e-16,
    9.662128970303256737722e-17,
    -1.668606521437814630045e-17,
    3.108244048673814433749e-18,
    -6.191115787358144927447e-19,
    1.309144871722012154815e-19,
    -2.921162715264277362341e-20,
    6.843227394638250991826e-21,
    -1.675768566042469947917e-21,
)

P1_LARGE = (
    1.000903040860013699896,
    0.0008989898330859408555703,
    -0.000003987284300488908522835,
    6.177633960644298534916e-8,
    -1.871890749106306608663e-9,
    8.816898659582338898458e-11,
    -5.704863640395644701855e-12,
    4.699195515230542375205e-13,
    -4.684223783990489221594e-14,
    5.452674896044717168267e-15,
    -7.221180842274017918867e-16,
    1.066768911433541245662e-16,
    -1.731231321611633497344e-17,
    3.049299119766587226134e-18,
    -5.772421654987453658853e-19,
    1.165057175571149052793e-19,
)

Q1_LARGE = (
    0.04677778706953532524064,
    -0.0000962772354915707932425,
    9.138615257955454124447e-7,
    -2.095978138408342246055e-8,
    8.229193327650554128954e-10,
    -4.686363688176945230467e-11,
    3.515218794968608085074e-12,
    -3.264315674327899926009e-13,
    3.596776582916529192954e-14,
    -4.561252395077297194298e-15,
    6.508282957783383953895e-16,
    -1.026914753182324286346e-16,
    1.767635548776479160319e-17,
    -3.283451987298161460529e-18,
    6.524081149589260303147e-19,
    -1.376577148484948803126e-19,
    3.065741540032889388513e-20,
    -7.169593469340277376628e-21,
)

I0_SMALL = (
    0.3383976372047380424976,
    -0.3046826723431983986825,
    0.1716209015222087753486,
    -0.09490109704804764442096,
    0.04930528423967070848778,
    -0.02373741480589946881557,
    0.01054646039459499831832,
    -0.004324309995050575944305,
    0.001639475616941335798419,
    -0.0005763755745385823658849,
    0.0001885028850958416557285,
    -0.00005754195010082103703976,
    0.00001644844807072889708932,
    -0.000004416738358458750563591,
    0.000001117387539120103718153,
    -2.670793853940611733914e-7,
    6.046995022541918949319e-8,
    -1.300025009986248042122e-8,
    2.659823724682386650347e-9,
    -5.189795601635262906656e-10,
    9.675809035373236912244e-11,
    -1.726826291441555707232e-11,
    2.955052663129639834608e-12,
    -4.856446783111929460898e-13,
    7.676185498604935616881e-14,
    -1.16853328779934516808e-14,
    1.715391285555133030606e-15,
    -2.431279846547954693595e-16,
    3.330794518822238097829e-17,
    -4.415341646479339379497e-18,
    5.669178006921496157086e-19,
    -7.057100692457293367118e-20,
)

I1_SMALL = (
    0.1262935932218168274117,
    -0.1764165183578340551527,
    0.1026436586898470953841,
    -0.05294598120809499142692,
    0.02472644903062651682829,
    -0.01056408489462619815576,
    0.00415642294431288815669,
    -0.001513572450631253148987,
    0.0005122859561685757728954,
    -0.0001617608158258967455879,
    0.00004781565107550054226378,
    -0.00001327316365603943582791,
    0.000003470251308137678476736,
    -8.568720264695454740656e-7,
    2.003294753552135262286e-7,
    -4.445059128796328080654e-8,
    9.381537386495771783882e-9,
    -1.887249751722829287904e-9,
    3.625590281552117037008e-10,
    -6.663489723502027742231e-11,
    1.173618629889090163082e-11,
    -1.983974397764943715199e-12,
    3.223793365945574709813e-13,
    -5.042185504727911687107e-14,
    7.600684294735406934074e-15,
    -1.105596947735386308026e-15,
    1.553631957736200468917e-16,
    -2.111421214358166078239e-17,
    2.777914112761046370485e-18,
    -3.54158177254213620523e-19,
    4.379302756655070994573e-20,
)

I0_LARGE = (
    0.4022452055070544158039,
    0.003369116478255694089898,
    0.00006889758346916823984263,
    0.000002891370520834756482967,
    2.048918589469063741828e-7,
    2.266668990498178064593e-8,
    3.396232025708386345151e-9,
    4.940602388224969589105e-10,
    1.188914710784643834241e-11,
    -3.149916527963241364539e-11,
    -1.321581184044771311875e-11,
    -1.794178531506806117779e-12,
    7.180124451383666233671e-13,
    3.852778382742142701141e-13,
    1.540086217521409826913e-14,
    -4.150569347287222086627e-14,
    -9.554846698828307648702e-15,
    3.811680669352622420746e-15,
    1.772560133056526383605e-15,
    -3.425485619677219134619e-16,
    -2.827623980516583484942e-16,
    3.461222867697461093097e-17,
    4.46562142029675999901e-17,
    -4.830504485944182071255e-18,
    -7.233180487874753954562e-18,
    9.921475412173698598883e-19,
    1.193650890845982085504e-18,
    -2.48870983715080723572e-19,
    -1.938426454160905928984e-19,
    6.444656697373443868792e-20,
)

I1_LARGE = (
    0.3892881175091400602372,
    -0.009761097491361468407765,
    -0.0001105889387626237162913,
    -0.000003882564808877690393457,
    -2.512236237870208925295e-7,
    -2.631468846889519506837e-8,
    -3.835380385964237022045e-9,
    -5.589743462196583806868e-10,
    -1.897495812350541234499e-11,
    3.252603583015488238555e-11,
    1.412580743661378133163e-11,
    2.035628544147089507225e-12,
    -7.198551776245908512093e-13,
    -4.083551111092197318228e-13,
    -2.10154184277266431302e-14,
    4.272440016711951354298e-14,
    1.042027698412880276417e-14,
    -3.814403072437007804767e-15,
    -1.880354775510782448513e-15,
    3.308202310920928282732e-16,
    2.962628997645950139069e-16,
    -3.209525921993423958778e-17,
    -4.650305368489358325571e-17,
    4.414348323071707949946e-18,
    7.517296310842104805426e-18,
    -9.314178867326883375683e-19,
    -1.242193275194890956117e-18,
    2.414276719454848469006e-19,
    2.026944384053285178973e-19,
    -6.394267188269097787036e-20,
)

K0_SMALL = (
    0.8433977275772222962874,
    0.7870789908592959491253,
    0.06152577860244072189508,
    0.001945894614185328316889,
    0.00003324799870059762854558,
    3.556382516627700573982e-7,
    2.605620741898849761852e-9,
    1.389514163198277859887e-11,
    5.635214661841846707044e-14,
    1.796627870313608262464e-16,
    4.621530611976465150947e-19,
)

K1_SMALL = (
    -0.5089237845320825085942,
    -0.2114356597763455950409,
    -0.01072557531032273891028,
    -0.0002513233586483403346758,
    -0.000003411200255414296857283,
    -3.026704146655771052154e-8,
    -1.894597223991610188729e-10,
    -8.81922139622875144561e-13,
    -3.173348763892321741223e-15,
    -9.092150880033067146654e-18,
)

K0_LARGE = (
    1.220151541032977727338,
    -0.03144810131196450054272,
    0.001569883885730053374913,
    -0.0001284954958162780263836,
    0.00001394981371887649936408,
    -0.000001831755522719119484778,
    2.76681363944501507614e-7,
    -4.660489897687947665561e-8,
    8.574034017414226085822e-9,
    -1.697534509389061515644e-9,
    3.577397281400328447163e-10,
    -7.957489244477397037735e-11,
    1.855949114954926554973e-11,
    -4.514597883374519175066e-12,
    1.140340588207344234725e-12,
    -2.980096923148178354834e-13,
    8.032890775068374369446e-14,
    -2.227513326746296360447e-14,
    6.340076476276645966132e-15,
    -1.848593377920907169411e-15,
    5.51205599940433336489e-16,
    -1.678231125754900638322e-16,
    5.210391777643554112541e-17,
    -1.647580593984263281528e-17,
    5.300433771177335771039e-18,
    -1.733171200582100027821e-18,
    5.755109202882729379373e-19,
    -1.939095605318355466049e-19,
)

K1_LARGE = (
    1.360313095242221334723,
    0.1039237365768172384374,
    -0.0028578168596227793868,
    0.0001952155184713516311077,
    -0.0000193619797416608296002,
    0.000002406484947837217117059,
    -3.501960603087812542096e-7,
    5.741084125450049292307e-8,
    -1.034576246567809702666e-8,
    2.015049755197034616148e-9,
    -4.190354759341925584241e-10,
    9.218315187605314125826e-11,
    -2.129967838427791021553e-11,
    5.139639673482343540396e-12,
    -1.289173960949822935197e-12,
    3.348419666052243120096e-13,
    -8.976705182010146069151e-14,
    2.477154424219598681335e-14,
    -7.019837089214768851312e-15,
    2.038703166239860879929e-15,
    -6.057047270643017822781e-16,
    1.838093575243045425562e-16,
    -5.689462849193648374251e-17,
    1.79405104788635729143e-17,
    -5.756744482073302450286e-18,
    1.877865190162326740113e-18,
    -6.221645287352609185183e-19,
    2.09191252698311365524e-19,
)
