#pragma once

#include <cstdint>
#include <vector>

namespace primeweb::testdata {

// Published rows of the prime progression matrix: key, then depths 1, 2, ...
// The key 127 is prime, so that line is not a generator row; its values
// continue the row of generator 1 from depth 7 on.
struct ReferenceRow {
    std::uint64_t key;
    std::vector<std::uint64_t> values;
};

inline const std::vector<ReferenceRow>& reference_prime_matrix() {
    static const std::vector<ReferenceRow> rows{
        {1, {2, 3, 5, 11, 31, 127, 709, 5381, 52711, 648391, 9737333, 174440041, 3657500101ull, 88362852307ull, 2428095424619ull, 75063692618249ull}},
        {4, {7, 17, 59, 277, 1787, 15299, 167449, 2269733, 37139213, 718064159, 16123689073ull, 414507281407ull, 12055296811267ull}},
        {6, {13, 41, 179, 1063, 8527, 87803, 1128889, 17624813, 326851121, 7069067389ull, 175650481151ull, 4952019383323ull}},
        {8, {19, 67, 331, 2221, 19577, 219613, 3042161, 50728129, 997525853, 22742734291ull, 592821132889ull, 17461204521323ull}},
        {9, {23, 83, 431, 3001, 27457, 318211, 4535189, 77557187, 1559861749, 36294260117ull, 963726515729ull, 28871271685163ull}},
        {10, {29, 109, 599, 4397, 42043, 506683, 7474967, 131807699, 2724711961ull, 64988430769ull, 1765037224331ull, 53982894593057ull}},
        {12, {37, 157, 919, 7193, 72727, 919913, 14161729, 259336153, 5545806481ull, 136395369829ull, 3809491708961ull}},
        {14, {43, 191, 1153, 9319, 96797, 1254739, 19734581, 368345293, 8012791231ull, 200147986693ull, 5669795882633ull}},
        {15, {47, 211, 1297, 10631, 112129, 1471343, 23391799, 440817757, 9672485827ull, 243504973489ull, 6947574946087ull}},
        {16, {53, 241, 1523, 12763, 137077, 1828669, 29499439, 563167303, 12501968177ull, 318083817907ull, 9163611272327ull}},
        {18, {61, 283, 1847, 15823, 173867, 2364361, 38790341, 751783477, 16917026909ull, 435748987787ull, 12695664159413ull}},
        {20, {71, 353, 2381, 21179, 239489, 3338989, 56011909, 1107276647, 25366202179ull, 664090238153ull, 19638537755027ull}},
        {21, {73, 367, 2477, 22093, 250751, 3509299, 59053067, 1170710369, 26887732891ull, 705555301183ull, 20909033866927ull}},
        {22, {79, 401, 2749, 24859, 285191, 4030889, 68425619, 1367161723, 31621854169ull, 835122557939ull, 24894639811901ull}},
        {24, {89, 461, 3259, 30133, 352007, 5054303, 87019979, 1760768239, 41192432219ull, 1099216100167ull, 33080040753131ull}},
        {25, {97, 509, 3637, 33967, 401519, 5823667, 101146501, 2062666783, 48596930311ull, 1305164025929ull, 39510004035659ull}},
        {26, {101, 547, 3943, 37217, 443419, 6478961, 113256643, 2323114841ull, 55022031709ull, 1484830174901ull, 45147154715447ull}},
        {27, {103, 563, 4091, 38833, 464939, 6816631, 119535373, 2458721501ull, 58379844161ull, 1579041544637ull, 48112275898789ull}},
        {28, {107, 587, 4273, 40819, 490643, 7220981, 127065427, 2621760397ull, 62427213623ull, 1692866362237ull, 51702420222709ull}},
        {30, {113, 617, 4549, 43651, 527623, 7807321, 138034009, 2860139341ull, 68363711327ull, 1860306318433ull, 56997887937671ull}},
        {32, {131, 739, 5623, 55351, 683873, 10311439, 185350441, 3898093877ull, 94434956839ull, 2606906998739ull, 80783250929599ull}},
        {33, {137, 773, 5869, 57943, 718807, 10875143, 196100297, 4135824247ull, 100450108949ull, 2773622459039ull, 86127342906779ull}},
        {34, {139, 797, 6113, 60647, 755387, 11469013, 207460717, 4387715993ull, 106839327589ull, 2956887579073ull}},
        {35, {149, 859, 6661, 66851, 839483, 12838937, 233784751, 4973864561ull, 121763369327ull, 3386468161121ull}},
        {36, {151, 877, 6823, 68639, 864013, 13243033, 241568891, 5147813641ull, 126206581463ull, 3514741569337ull}},
        {38, {163, 967, 7607, 77431, 985151, 15239333, 280256489, 6016014239ull, 148471002899ull, 4159843299587ull}},
        {39, {167, 991, 7841, 80071, 1021271, 15837299, 291905681, 6278569691ull, 155231019913ull, 4356423418499ull}},
        {40, {173, 1031, 8221, 84347, 1080923, 16827557, 311234591, 6715304579ull, 166500464477ull, 4684808232443ull}},
        {42, {181, 1087, 8719, 90023, 1159901, 18143603, 337033877, 7300206493ull, 181639026043ull, 5127173445557ull}},
        {44, {193, 1171, 9461, 98519, 1278779, 20137253, 376292689, 8194134017ull, 204869160779ull, 5808496248769ull}},
        {45, {197, 1201, 9739, 101701, 1323503, 20890789, 391182829, 8534307629ull, 213736527847ull, 6069307408303ull}},
        {46, {199, 1217, 9859, 103069, 1342907, 21219089, 397681327, 8682977119ull, 217616274683ull, 6183541562551ull}},
        {48, {223, 1409, 11743, 125113, 1656649, 26548261, 503859997, 11126538823ull, 281736685679ull, 8081022964981ull}},
        {49, {227, 1433, 11953, 127643, 1693031, 27170047, 516340703, 11415461989ull, 289357897711ull, 8307635814431ull}},
        {50, {229, 1447, 12097, 129229, 1715761, 27560453, 524172379, 11596829689ull, 294145810687ull, 8450108859131ull}},
        {51, {233, 1471, 12301, 131707, 1751411, 28171007, 536433767, 11881126321ull, 301656862553ull, 8673774992821ull}},
        {52, {239, 1499, 12547, 134597, 1793237, 28889363, 550881943, 12216514841ull, 310526940547ull, 8938160481557ull}},
        {54, {251, 1597, 13469, 145547, 1950629, 31599859, 605555557, 13489097663ull, 344268078839ull, 9946200971687ull}},
        {55, {257, 1621, 13709, 148439, 1993039, 32332763, 620393003, 13835380799ull, 353471438263ull, 10221768670013ull}},
        {56, {263, 1669, 14177, 153877, 2071583, 33691309, 647927381, 14478972721ull, 370600719481ull, 10735307868743ull}},
        {57, {269, 1723, 14723, 160483, 2167937, 35368547, 682005953, 15277169617ull, 391886115431ull, 11374585999793ull}},
        {58, {271, 1741, 14867, 162257, 2193689, 35815873, 691097513, 15490445177ull, 397580778799ull, 11545824668459ull}},
        {60, {281, 1823, 15641, 171697, 2332537, 38235377, 740436923, 16649917331ull, 428592846379ull, 12479807093519ull}},
        {62, {293, 1913, 16519, 182261, 2487943, 40951019, 796000427, 17959785803ull, 463728180431ull, 13540770614753ull}},
        {63, {307, 2027, 17627, 195677, 2685911, 44432569, 867503173, 19651365719ull, 509248998611ull, 14919411840803ull}},
        {64, {311, 2063, 17987, 200017, 2750357, 45564719, 890830471, 20204583739ull, 524169678691ull, 15372235794151ull}},
        {65, {313, 2081, 18149, 202001, 2779781, 46082987, 901517753, 20458245581ull, 531016168117ull, 15580165580489ull}},
        {66, {317, 2099, 18311, 204067, 2810191, 46620709, 912598217, 20721384791ull, 538121923037ull, 15796066509169ull}},
        {68, {337, 2269, 20063, 225503, 3129913, 52286593, 1029838717, 23513901553ull, 613739626127ull, 18099406558319ull}},
        {69, {347, 2341, 20773, 234293, 3260657, 54615469, 1078227191, 24670634249ull, 645165616243ull, 19059563752283ull}},
        {70, {349, 2351, 20899, 235891, 3284657, 55043683, 1087126459, 24883634693ull, 650958710863ull, 19236734782351ull}},
        {72, {359, 2417, 21529, 243781, 3403457, 57160969, 1131224411, 25940205719ull, 679722101701ull, 20117195040149ull}},
        {74, {373, 2549, 22811, 259657, 3643579, 61460533, 1221036307, 28097383163ull, 738585245417ull, 21922891272739ull}},
        {75, {379, 2609, 23431, 267439, 3760921, 63567289, 1265161649, 29159843309ull, 767640499331ull, 22816010162129ull}},
        {76, {383, 2647, 23801, 271939, 3829223, 64795981, 1290918281, 29780778613ull, 784640376427ull, 23339094889519ull}},
        {77, {389, 2683, 24107, 275837, 3888551, 65864459, 1313343397, 30321784529ull, 799462887341ull, 23795492951147ull}},
        {78, {397, 2719, 24509, 280913, 3965483, 67247771, 1342401539, 31023447269ull, 818701472243ull, 24388288001989ull}},
        {80, {409, 2803, 25423, 292489, 4142053, 70432519, 1409422013, 32644249103ull, 863205467819ull, 25761357737977ull}},
        {81, {419, 2897, 26371, 304553, 4326473, 73768631, 1479780677, 34349423377ull, 910115902141ull, 27211243680073ull}},
        {82, {421, 2909, 26489, 305999, 4348681, 74172503, 1488302867, 34556157661ull, 915809403721ull, 27387388206553ull}},
        {84, {433, 3019, 27689, 321017, 4578163, 78339559, 1576442723, 36697520357ull, 974856473813ull, 29216297536511ull}},
        {85, {439, 3067, 28109, 326203, 4658099, 79794157, 1607252663, 37447368857ull, 995564440951ull, 29858589333061ull}},
        {86, {443, 3109, 28573, 332099, 4748047, 81428323, 1641908027, 38291437141ull, 1018893116299ull, 30582699050611ull}},
        {87, {449, 3169, 29153, 339601, 4863959, 83543071, 1686826109, 39386748617ull, 1049194449883ull, 31524064728311ull}},
        {88, {457, 3229, 29803, 347849, 4989697, 85839547, 1735649329, 40578571003ull, 1082201297941ull, 32550506359429ull}},
        {90, {463, 3299, 30557, 357473, 5138719, 88565483, 1793681753, 41997140089ull, 1121535591721ull, 33775078562347ull}},
        {91, {467, 3319, 30781, 360293, 5182717, 89369047, 1810798861, 42415879469ull, 1133155938589ull, 34137123380603ull}},
        {92, {479, 3407, 31667, 371981, 5363167, 92678347, 1881428537, 44145738083ull, 1181205761389ull, 35635464099689ull}},
        {93, {487, 3469, 32341, 380557, 5496349, 95121911, 1933651711, 45426482839ull, 1216826411041ull, 36747532444747ull}},
        {94, {491, 3517, 32797, 386401, 5587537, 96797411, 1969496239, 46306458839ull, 1241322670799ull, 37512927359291ull}},
        {95, {499, 3559, 33203, 391711, 5670851, 98330021, 2002298621, 47112340151ull, 1263771327193ull, 38214783465337ull}},
        {96, {503, 3593, 33569, 396269, 5741453, 99630571, 2030158657, 47797243919ull, 1282861540019ull, 38811965770483ull}},
        {98, {521, 3733, 35023, 415253, 6037513, 105089261, 2147305243, 50681376121ull, 1363360331743ull, 41333311232987ull}},
        {99, {523, 3761, 35311, 418961, 6095731, 106166089, 2170447637ull, 51251887327ull, 1379303865481ull, 41833278300773ull}},
        {100, {541, 3911, 36887, 439357, 6415081, 112073683, 2297602183ull, 54391267121ull, 1467155677657ull, 44591559921641ull}},
        {102, {557, 4027, 38153, 455849, 6673993, 116881321, 2401362767ull, 56958606937ull, 1539140110927ull, 46855727983837ull}},
        {104, {569, 4133, 39239, 470207, 6898807, 121064467, 2491797367ull, 59200082443ull, 1602086508713ull, 48838469899327ull}},
        {105, {571, 4153, 39451, 472837, 6940103, 121834483, 2508461203ull, 59613478459ull, 1613705610163ull, 49204743622123ull}},
        {106, {577, 4217, 40151, 481847, 7081709, 124469621, 2565499711ull, 61029312569ull, 1653521623993ull, 50460527025823ull}},
        {108, {593, 4339, 41491, 499403, 7359427, 129647857, 2677808011ull, 63821022049ull, 1732128413677ull, 52942646093899ull}},
        {110, {601, 4421, 42293, 510031, 7528669, 132814411, 2746597487ull, 65533394977ull, 1780407360517ull, 54468962620717ull}},
        {111, {607, 4463, 42697, 515401, 7612799, 134389627, 2780844971ull, 66386576369ull, 1804479121591ull, 55230488801623ull}},
        {112, {613, 4517, 43283, 522829, 7730539, 136593931, 2828789699ull, 67581794939ull, 1838220650251ull, 56298481067219ull}},
        {114, {619, 4567, 43889, 530773, 7856939}},
        {115, {631, 4663, 44879, 543967, 8066533}},
        {116, {641, 4759, 45971, 558643, 8300687}},
        {117, {643, 4787, 46279, 562711, 8365481}},
        {118, {647, 4801, 46451, 565069, 8402833}},
        {119, {653, 4877, 47297, 576203, 8580151}},
        {120, {659, 4933, 47857, 583523, 8696917}},
        {121, {661, 4943, 47963, 584999, 8720227}},
        {122, {673, 5021, 48821, 596243, 8900383}},
        {123, {677, 5059, 49207, 601397, 8982923}},
        {124, {683, 5107, 49739, 608459, 9096533}},
        {125, {691, 5189, 50591, 619739, 9276991}},
        {126, {701, 5281, 51599, 633467, 9498161}},
        {127, {709, 5381, 52711, 648391, 9737333}},
        {128, {719, 5441, 53353, 657121, 9878657}},
        {129, {727, 5503, 54013, 665843, 10020343}},
        {130, {733, 5557, 54601, 673793, 10147877}},
        {132, {743, 5651, 55681, 688249, 10382033}},
        {133, {751, 5701, 56197, 695239, 10493953}},
        {134, {757, 5749, 56701, 702173, 10606223}},
        {135, {761, 5801, 57193, 708479, 10707449}},
        {136, {769, 5851, 57751, 715969, 10829519}},
        {138, {787, 6037, 59723, 742681, 11261903}},
        {140, {809, 6217, 61819, 771079, 11723507}},
        {141, {811, 6229, 61979, 773317, 11760029}},
        {142, {821, 6311, 62921, 786053, 11967047}},
        {143, {823, 6323, 63059, 788009, 11999111}},
        {144, {827, 6353, 63391, 792413, 12071197}},
        {145, {829, 6361, 63467, 793511, 12089177}},
        {146, {839, 6469, 64679, 809917, 12356863}},
        {147, {853, 6599, 66089, 828923, 12667463}},
        {148, {857, 6653, 66749, 838091, 12816389}},
        {150, {863, 6691, 67157, 843613, 12907091}},
        {152, {881, 6841, 68821, 866329, 13280819}},
        {153, {883, 6863, 69109, 870161, 13343881}},
        {154, {887, 6899, 69491, 875519, 13431967}},
        {155, {907, 7057, 71287, 900157, 13836751}},
    };
    return rows;
}

}  // namespace primeweb::testdata
