// Unicode full case-folding table (codepoint -> folded codepoints).
// Generated from the Unicode character database; do not edit by hand.
#pragma once

#include <cstdint>
#include <cstddef>

namespace xricl::detail {

struct CaseFoldEntry {
  char32_t cp;
  char32_t folded[3];
  std::uint8_t len;
};

inline constexpr std::size_t kCaseFoldCount = 1490;

inline constexpr CaseFoldEntry kCaseFoldTable[kCaseFoldCount] = {
    {65,{97,0,0},1},{66,{98,0,0},1},{67,{99,0,0},1},{68,{100,0,0},1},
    {69,{101,0,0},1},{70,{102,0,0},1},{71,{103,0,0},1},{72,{104,0,0},1},
    {73,{105,0,0},1},{74,{106,0,0},1},{75,{107,0,0},1},{76,{108,0,0},1},
    {77,{109,0,0},1},{78,{110,0,0},1},{79,{111,0,0},1},{80,{112,0,0},1},
    {81,{113,0,0},1},{82,{114,0,0},1},{83,{115,0,0},1},{84,{116,0,0},1},
    {85,{117,0,0},1},{86,{118,0,0},1},{87,{119,0,0},1},{88,{120,0,0},1},
    {89,{121,0,0},1},{90,{122,0,0},1},{181,{956,0,0},1},{192,{224,0,0},1},
    {193,{225,0,0},1},{194,{226,0,0},1},{195,{227,0,0},1},{196,{228,0,0},1},
    {197,{229,0,0},1},{198,{230,0,0},1},{199,{231,0,0},1},{200,{232,0,0},1},
    {201,{233,0,0},1},{202,{234,0,0},1},{203,{235,0,0},1},{204,{236,0,0},1},
    {205,{237,0,0},1},{206,{238,0,0},1},{207,{239,0,0},1},{208,{240,0,0},1},
    {209,{241,0,0},1},{210,{242,0,0},1},{211,{243,0,0},1},{212,{244,0,0},1},
    {213,{245,0,0},1},{214,{246,0,0},1},{216,{248,0,0},1},{217,{249,0,0},1},
    {218,{250,0,0},1},{219,{251,0,0},1},{220,{252,0,0},1},{221,{253,0,0},1},
    {222,{254,0,0},1},{223,{115,115,0},2},{256,{257,0,0},1},{258,{259,0,0},1},
    {260,{261,0,0},1},{262,{263,0,0},1},{264,{265,0,0},1},{266,{267,0,0},1},
    {268,{269,0,0},1},{270,{271,0,0},1},{272,{273,0,0},1},{274,{275,0,0},1},
    {276,{277,0,0},1},{278,{279,0,0},1},{280,{281,0,0},1},{282,{283,0,0},1},
    {284,{285,0,0},1},{286,{287,0,0},1},{288,{289,0,0},1},{290,{291,0,0},1},
    {292,{293,0,0},1},{294,{295,0,0},1},{296,{297,0,0},1},{298,{299,0,0},1},
    {300,{301,0,0},1},{302,{303,0,0},1},{304,{105,775,0},2},{306,{307,0,0},1},
    {308,{309,0,0},1},{310,{311,0,0},1},{313,{314,0,0},1},{315,{316,0,0},1},
    {317,{318,0,0},1},{319,{320,0,0},1},{321,{322,0,0},1},{323,{324,0,0},1},
    {325,{326,0,0},1},{327,{328,0,0},1},{329,{700,110,0},2},{330,{331,0,0},1},
    {332,{333,0,0},1},{334,{335,0,0},1},{336,{337,0,0},1},{338,{339,0,0},1},
    {340,{341,0,0},1},{342,{343,0,0},1},{344,{345,0,0},1},{346,{347,0,0},1},
    {348,{349,0,0},1},{350,{351,0,0},1},{352,{353,0,0},1},{354,{355,0,0},1},
    {356,{357,0,0},1},{358,{359,0,0},1},{360,{361,0,0},1},{362,{363,0,0},1},
    {364,{365,0,0},1},{366,{367,0,0},1},{368,{369,0,0},1},{370,{371,0,0},1},
    {372,{373,0,0},1},{374,{375,0,0},1},{376,{255,0,0},1},{377,{378,0,0},1},
    {379,{380,0,0},1},{381,{382,0,0},1},{383,{115,0,0},1},{385,{595,0,0},1},
    {386,{387,0,0},1},{388,{389,0,0},1},{390,{596,0,0},1},{391,{392,0,0},1},
    {393,{598,0,0},1},{394,{599,0,0},1},{395,{396,0,0},1},{398,{477,0,0},1},
    {399,{601,0,0},1},{400,{603,0,0},1},{401,{402,0,0},1},{403,{608,0,0},1},
    {404,{611,0,0},1},{406,{617,0,0},1},{407,{616,0,0},1},{408,{409,0,0},1},
    {412,{623,0,0},1},{413,{626,0,0},1},{415,{629,0,0},1},{416,{417,0,0},1},
    {418,{419,0,0},1},{420,{421,0,0},1},{422,{640,0,0},1},{423,{424,0,0},1},
    {425,{643,0,0},1},{428,{429,0,0},1},{430,{648,0,0},1},{431,{432,0,0},1},
    {433,{650,0,0},1},{434,{651,0,0},1},{435,{436,0,0},1},{437,{438,0,0},1},
    {439,{658,0,0},1},{440,{441,0,0},1},{444,{445,0,0},1},{452,{454,0,0},1},
    {453,{454,0,0},1},{455,{457,0,0},1},{456,{457,0,0},1},{458,{460,0,0},1},
    {459,{460,0,0},1},{461,{462,0,0},1},{463,{464,0,0},1},{465,{466,0,0},1},
    {467,{468,0,0},1},{469,{470,0,0},1},{471,{472,0,0},1},{473,{474,0,0},1},
    {475,{476,0,0},1},{478,{479,0,0},1},{480,{481,0,0},1},{482,{483,0,0},1},
    {484,{485,0,0},1},{486,{487,0,0},1},{488,{489,0,0},1},{490,{491,0,0},1},
    {492,{493,0,0},1},{494,{495,0,0},1},{496,{106,780,0},2},{497,{499,0,0},1},
    {498,{499,0,0},1},{500,{501,0,0},1},{502,{405,0,0},1},{503,{447,0,0},1},
    {504,{505,0,0},1},{506,{507,0,0},1},{508,{509,0,0},1},{510,{511,0,0},1},
    {512,{513,0,0},1},{514,{515,0,0},1},{516,{517,0,0},1},{518,{519,0,0},1},
    {520,{521,0,0},1},{522,{523,0,0},1},{524,{525,0,0},1},{526,{527,0,0},1},
    {528,{529,0,0},1},{530,{531,0,0},1},{532,{533,0,0},1},{534,{535,0,0},1},
    {536,{537,0,0},1},{538,{539,0,0},1},{540,{541,0,0},1},{542,{543,0,0},1},
    {544,{414,0,0},1},{546,{547,0,0},1},{548,{549,0,0},1},{550,{551,0,0},1},
    {552,{553,0,0},1},{554,{555,0,0},1},{556,{557,0,0},1},{558,{559,0,0},1},
    {560,{561,0,0},1},{562,{563,0,0},1},{570,{11365,0,0},1},{571,{572,0,0},1},
    {573,{410,0,0},1},{574,{11366,0,0},1},{577,{578,0,0},1},{579,{384,0,0},1},
    {580,{649,0,0},1},{581,{652,0,0},1},{582,{583,0,0},1},{584,{585,0,0},1},
    {586,{587,0,0},1},{588,{589,0,0},1},{590,{591,0,0},1},{837,{953,0,0},1},
    {880,{881,0,0},1},{882,{883,0,0},1},{886,{887,0,0},1},{895,{1011,0,0},1},
    {902,{940,0,0},1},{904,{941,0,0},1},{905,{942,0,0},1},{906,{943,0,0},1},
    {908,{972,0,0},1},{910,{973,0,0},1},{911,{974,0,0},1},{912,{953,776,769},3},
    {913,{945,0,0},1},{914,{946,0,0},1},{915,{947,0,0},1},{916,{948,0,0},1},
    {917,{949,0,0},1},{918,{950,0,0},1},{919,{951,0,0},1},{920,{952,0,0},1},
    {921,{953,0,0},1},{922,{954,0,0},1},{923,{955,0,0},1},{924,{956,0,0},1},
    {925,{957,0,0},1},{926,{958,0,0},1},{927,{959,0,0},1},{928,{960,0,0},1},
    {929,{961,0,0},1},{931,{963,0,0},1},{932,{964,0,0},1},{933,{965,0,0},1},
    {934,{966,0,0},1},{935,{967,0,0},1},{936,{968,0,0},1},{937,{969,0,0},1},
    {938,{970,0,0},1},{939,{971,0,0},1},{944,{965,776,769},3},{962,{963,0,0},1},
    {975,{983,0,0},1},{976,{946,0,0},1},{977,{952,0,0},1},{981,{966,0,0},1},
    {982,{960,0,0},1},{984,{985,0,0},1},{986,{987,0,0},1},{988,{989,0,0},1},
    {990,{991,0,0},1},{992,{993,0,0},1},{994,{995,0,0},1},{996,{997,0,0},1},
    {998,{999,0,0},1},{1000,{1001,0,0},1},{1002,{1003,0,0},1},{1004,{1005,0,0},1},
    {1006,{1007,0,0},1},{1008,{954,0,0},1},{1009,{961,0,0},1},{1012,{952,0,0},1},
    {1013,{949,0,0},1},{1015,{1016,0,0},1},{1017,{1010,0,0},1},{1018,{1019,0,0},1},
    {1021,{891,0,0},1},{1022,{892,0,0},1},{1023,{893,0,0},1},{1024,{1104,0,0},1},
    {1025,{1105,0,0},1},{1026,{1106,0,0},1},{1027,{1107,0,0},1},{1028,{1108,0,0},1},
    {1029,{1109,0,0},1},{1030,{1110,0,0},1},{1031,{1111,0,0},1},{1032,{1112,0,0},1},
    {1033,{1113,0,0},1},{1034,{1114,0,0},1},{1035,{1115,0,0},1},{1036,{1116,0,0},1},
    {1037,{1117,0,0},1},{1038,{1118,0,0},1},{1039,{1119,0,0},1},{1040,{1072,0,0},1},
    {1041,{1073,0,0},1},{1042,{1074,0,0},1},{1043,{1075,0,0},1},{1044,{1076,0,0},1},
    {1045,{1077,0,0},1},{1046,{1078,0,0},1},{1047,{1079,0,0},1},{1048,{1080,0,0},1},
    {1049,{1081,0,0},1},{1050,{1082,0,0},1},{1051,{1083,0,0},1},{1052,{1084,0,0},1},
    {1053,{1085,0,0},1},{1054,{1086,0,0},1},{1055,{1087,0,0},1},{1056,{1088,0,0},1},
    {1057,{1089,0,0},1},{1058,{1090,0,0},1},{1059,{1091,0,0},1},{1060,{1092,0,0},1},
    {1061,{1093,0,0},1},{1062,{1094,0,0},1},{1063,{1095,0,0},1},{1064,{1096,0,0},1},
    {1065,{1097,0,0},1},{1066,{1098,0,0},1},{1067,{1099,0,0},1},{1068,{1100,0,0},1},
    {1069,{1101,0,0},1},{1070,{1102,0,0},1},{1071,{1103,0,0},1},{1120,{1121,0,0},1},
    {1122,{1123,0,0},1},{1124,{1125,0,0},1},{1126,{1127,0,0},1},{1128,{1129,0,0},1},
    {1130,{1131,0,0},1},{1132,{1133,0,0},1},{1134,{1135,0,0},1},{1136,{1137,0,0},1},
    {1138,{1139,0,0},1},{1140,{1141,0,0},1},{1142,{1143,0,0},1},{1144,{1145,0,0},1},
    {1146,{1147,0,0},1},{1148,{1149,0,0},1},{1150,{1151,0,0},1},{1152,{1153,0,0},1},
    {1162,{1163,0,0},1},{1164,{1165,0,0},1},{1166,{1167,0,0},1},{1168,{1169,0,0},1},
    {1170,{1171,0,0},1},{1172,{1173,0,0},1},{1174,{1175,0,0},1},{1176,{1177,0,0},1},
    {1178,{1179,0,0},1},{1180,{1181,0,0},1},{1182,{1183,0,0},1},{1184,{1185,0,0},1},
    {1186,{1187,0,0},1},{1188,{1189,0,0},1},{1190,{1191,0,0},1},{1192,{1193,0,0},1},
    {1194,{1195,0,0},1},{1196,{1197,0,0},1},{1198,{1199,0,0},1},{1200,{1201,0,0},1},
    {1202,{1203,0,0},1},{1204,{1205,0,0},1},{1206,{1207,0,0},1},{1208,{1209,0,0},1},
    {1210,{1211,0,0},1},{1212,{1213,0,0},1},{1214,{1215,0,0},1},{1216,{1231,0,0},1},
    {1217,{1218,0,0},1},{1219,{1220,0,0},1},{1221,{1222,0,0},1},{1223,{1224,0,0},1},
    {1225,{1226,0,0},1},{1227,{1228,0,0},1},{1229,{1230,0,0},1},{1232,{1233,0,0},1},
    {1234,{1235,0,0},1},{1236,{1237,0,0},1},{1238,{1239,0,0},1},{1240,{1241,0,0},1},
    {1242,{1243,0,0},1},{1244,{1245,0,0},1},{1246,{1247,0,0},1},{1248,{1249,0,0},1},
    {1250,{1251,0,0},1},{1252,{1253,0,0},1},{1254,{1255,0,0},1},{1256,{1257,0,0},1},
    {1258,{1259,0,0},1},{1260,{1261,0,0},1},{1262,{1263,0,0},1},{1264,{1265,0,0},1},
    {1266,{1267,0,0},1},{1268,{1269,0,0},1},{1270,{1271,0,0},1},{1272,{1273,0,0},1},
    {1274,{1275,0,0},1},{1276,{1277,0,0},1},{1278,{1279,0,0},1},{1280,{1281,0,0},1},
    {1282,{1283,0,0},1},{1284,{1285,0,0},1},{1286,{1287,0,0},1},{1288,{1289,0,0},1},
    {1290,{1291,0,0},1},{1292,{1293,0,0},1},{1294,{1295,0,0},1},{1296,{1297,0,0},1},
    {1298,{1299,0,0},1},{1300,{1301,0,0},1},{1302,{1303,0,0},1},{1304,{1305,0,0},1},
    {1306,{1307,0,0},1},{1308,{1309,0,0},1},{1310,{1311,0,0},1},{1312,{1313,0,0},1},
    {1314,{1315,0,0},1},{1316,{1317,0,0},1},{1318,{1319,0,0},1},{1320,{1321,0,0},1},
    {1322,{1323,0,0},1},{1324,{1325,0,0},1},{1326,{1327,0,0},1},{1329,{1377,0,0},1},
    {1330,{1378,0,0},1},{1331,{1379,0,0},1},{1332,{1380,0,0},1},{1333,{1381,0,0},1},
    {1334,{1382,0,0},1},{1335,{1383,0,0},1},{1336,{1384,0,0},1},{1337,{1385,0,0},1},
    {1338,{1386,0,0},1},{1339,{1387,0,0},1},{1340,{1388,0,0},1},{1341,{1389,0,0},1},
    {1342,{1390,0,0},1},{1343,{1391,0,0},1},{1344,{1392,0,0},1},{1345,{1393,0,0},1},
    {1346,{1394,0,0},1},{1347,{1395,0,0},1},{1348,{1396,0,0},1},{1349,{1397,0,0},1},
    {1350,{1398,0,0},1},{1351,{1399,0,0},1},{1352,{1400,0,0},1},{1353,{1401,0,0},1},
    {1354,{1402,0,0},1},{1355,{1403,0,0},1},{1356,{1404,0,0},1},{1357,{1405,0,0},1},
    {1358,{1406,0,0},1},{1359,{1407,0,0},1},{1360,{1408,0,0},1},{1361,{1409,0,0},1},
    {1362,{1410,0,0},1},{1363,{1411,0,0},1},{1364,{1412,0,0},1},{1365,{1413,0,0},1},
    {1366,{1414,0,0},1},{1415,{1381,1410,0},2},{4256,{11520,0,0},1},{4257,{11521,0,0},1},
    {4258,{11522,0,0},1},{4259,{11523,0,0},1},{4260,{11524,0,0},1},{4261,{11525,0,0},1},
    {4262,{11526,0,0},1},{4263,{11527,0,0},1},{4264,{11528,0,0},1},{4265,{11529,0,0},1},
    {4266,{11530,0,0},1},{4267,{11531,0,0},1},{4268,{11532,0,0},1},{4269,{11533,0,0},1},
    {4270,{11534,0,0},1},{4271,{11535,0,0},1},{4272,{11536,0,0},1},{4273,{11537,0,0},1},
    {4274,{11538,0,0},1},{4275,{11539,0,0},1},{4276,{11540,0,0},1},{4277,{11541,0,0},1},
    {4278,{11542,0,0},1},{4279,{11543,0,0},1},{4280,{11544,0,0},1},{4281,{11545,0,0},1},
    {4282,{11546,0,0},1},{4283,{11547,0,0},1},{4284,{11548,0,0},1},{4285,{11549,0,0},1},
    {4286,{11550,0,0},1},{4287,{11551,0,0},1},{4288,{11552,0,0},1},{4289,{11553,0,0},1},
    {4290,{11554,0,0},1},{4291,{11555,0,0},1},{4292,{11556,0,0},1},{4293,{11557,0,0},1},
    {4295,{11559,0,0},1},{4301,{11565,0,0},1},{5112,{5104,0,0},1},{5113,{5105,0,0},1},
    {5114,{5106,0,0},1},{5115,{5107,0,0},1},{5116,{5108,0,0},1},{5117,{5109,0,0},1},
    {7296,{1074,0,0},1},{7297,{1076,0,0},1},{7298,{1086,0,0},1},{7299,{1089,0,0},1},
    {7300,{1090,0,0},1},{7301,{1090,0,0},1},{7302,{1098,0,0},1},{7303,{1123,0,0},1},
    {7304,{42571,0,0},1},{7312,{4304,0,0},1},{7313,{4305,0,0},1},{7314,{4306,0,0},1},
    {7315,{4307,0,0},1},{7316,{4308,0,0},1},{7317,{4309,0,0},1},{7318,{4310,0,0},1},
    {7319,{4311,0,0},1},{7320,{4312,0,0},1},{7321,{4313,0,0},1},{7322,{4314,0,0},1},
    {7323,{4315,0,0},1},{7324,{4316,0,0},1},{7325,{4317,0,0},1},{7326,{4318,0,0},1},
    {7327,{4319,0,0},1},{7328,{4320,0,0},1},{7329,{4321,0,0},1},{7330,{4322,0,0},1},
    {7331,{4323,0,0},1},{7332,{4324,0,0},1},{7333,{4325,0,0},1},{7334,{4326,0,0},1},
    {7335,{4327,0,0},1},{7336,{4328,0,0},1},{7337,{4329,0,0},1},{7338,{4330,0,0},1},
    {7339,{4331,0,0},1},{7340,{4332,0,0},1},{7341,{4333,0,0},1},{7342,{4334,0,0},1},
    {7343,{4335,0,0},1},{7344,{4336,0,0},1},{7345,{4337,0,0},1},{7346,{4338,0,0},1},
    {7347,{4339,0,0},1},{7348,{4340,0,0},1},{7349,{4341,0,0},1},{7350,{4342,0,0},1},
    {7351,{4343,0,0},1},{7352,{4344,0,0},1},{7353,{4345,0,0},1},{7354,{4346,0,0},1},
    {7357,{4349,0,0},1},{7358,{4350,0,0},1},{7359,{4351,0,0},1},{7680,{7681,0,0},1},
    {7682,{7683,0,0},1},{7684,{7685,0,0},1},{7686,{7687,0,0},1},{7688,{7689,0,0},1},
    {7690,{7691,0,0},1},{7692,{7693,0,0},1},{7694,{7695,0,0},1},{7696,{7697,0,0},1},
    {7698,{7699,0,0},1},{7700,{7701,0,0},1},{7702,{7703,0,0},1},{7704,{7705,0,0},1},
    {7706,{7707,0,0},1},{7708,{7709,0,0},1},{7710,{7711,0,0},1},{7712,{7713,0,0},1},
    {7714,{7715,0,0},1},{7716,{7717,0,0},1},{7718,{7719,0,0},1},{7720,{7721,0,0},1},
    {7722,{7723,0,0},1},{7724,{7725,0,0},1},{7726,{7727,0,0},1},{7728,{7729,0,0},1},
    {7730,{7731,0,0},1},{7732,{7733,0,0},1},{7734,{7735,0,0},1},{7736,{7737,0,0},1},
    {7738,{7739,0,0},1},{7740,{7741,0,0},1},{7742,{7743,0,0},1},{7744,{7745,0,0},1},
    {7746,{7747,0,0},1},{7748,{7749,0,0},1},{7750,{7751,0,0},1},{7752,{7753,0,0},1},
    {7754,{7755,0,0},1},{7756,{7757,0,0},1},{7758,{7759,0,0},1},{7760,{7761,0,0},1},
    {7762,{7763,0,0},1},{7764,{7765,0,0},1},{7766,{7767,0,0},1},{7768,{7769,0,0},1},
    {7770,{7771,0,0},1},{7772,{7773,0,0},1},{7774,{7775,0,0},1},{7776,{7777,0,0},1},
    {7778,{7779,0,0},1},{7780,{7781,0,0},1},{7782,{7783,0,0},1},{7784,{7785,0,0},1},
    {7786,{7787,0,0},1},{7788,{7789,0,0},1},{7790,{7791,0,0},1},{7792,{7793,0,0},1},
    {7794,{7795,0,0},1},{7796,{7797,0,0},1},{7798,{7799,0,0},1},{7800,{7801,0,0},1},
    {7802,{7803,0,0},1},{7804,{7805,0,0},1},{7806,{7807,0,0},1},{7808,{7809,0,0},1},
    {7810,{7811,0,0},1},{7812,{7813,0,0},1},{7814,{7815,0,0},1},{7816,{7817,0,0},1},
    {7818,{7819,0,0},1},{7820,{7821,0,0},1},{7822,{7823,0,0},1},{7824,{7825,0,0},1},
    {7826,{7827,0,0},1},{7828,{7829,0,0},1},{7830,{104,817,0},2},{7831,{116,776,0},2},
    {7832,{119,778,0},2},{7833,{121,778,0},2},{7834,{97,702,0},2},{7835,{7777,0,0},1},
    {7838,{115,115,0},2},{7840,{7841,0,0},1},{7842,{7843,0,0},1},{7844,{7845,0,0},1},
    {7846,{7847,0,0},1},{7848,{7849,0,0},1},{7850,{7851,0,0},1},{7852,{7853,0,0},1},
    {7854,{7855,0,0},1},{7856,{7857,0,0},1},{7858,{7859,0,0},1},{7860,{7861,0,0},1},
    {7862,{7863,0,0},1},{7864,{7865,0,0},1},{7866,{7867,0,0},1},{7868,{7869,0,0},1},
    {7870,{7871,0,0},1},{7872,{7873,0,0},1},{7874,{7875,0,0},1},{7876,{7877,0,0},1},
    {7878,{7879,0,0},1},{7880,{7881,0,0},1},{7882,{7883,0,0},1},{7884,{7885,0,0},1},
    {7886,{7887,0,0},1},{7888,{7889,0,0},1},{7890,{7891,0,0},1},{7892,{7893,0,0},1},
    {7894,{7895,0,0},1},{7896,{7897,0,0},1},{7898,{7899,0,0},1},{7900,{7901,0,0},1},
    {7902,{7903,0,0},1},{7904,{7905,0,0},1},{7906,{7907,0,0},1},{7908,{7909,0,0},1},
    {7910,{7911,0,0},1},{7912,{7913,0,0},1},{7914,{7915,0,0},1},{7916,{7917,0,0},1},
    {7918,{7919,0,0},1},{7920,{7921,0,0},1},{7922,{7923,0,0},1},{7924,{7925,0,0},1},
    {7926,{7927,0,0},1},{7928,{7929,0,0},1},{7930,{7931,0,0},1},{7932,{7933,0,0},1},
    {7934,{7935,0,0},1},{7944,{7936,0,0},1},{7945,{7937,0,0},1},{7946,{7938,0,0},1},
    {7947,{7939,0,0},1},{7948,{7940,0,0},1},{7949,{7941,0,0},1},{7950,{7942,0,0},1},
    {7951,{7943,0,0},1},{7960,{7952,0,0},1},{7961,{7953,0,0},1},{7962,{7954,0,0},1},
    {7963,{7955,0,0},1},{7964,{7956,0,0},1},{7965,{7957,0,0},1},{7976,{7968,0,0},1},
    {7977,{7969,0,0},1},{7978,{7970,0,0},1},{7979,{7971,0,0},1},{7980,{7972,0,0},1},
    {7981,{7973,0,0},1},{7982,{7974,0,0},1},{7983,{7975,0,0},1},{7992,{7984,0,0},1},
    {7993,{7985,0,0},1},{7994,{7986,0,0},1},{7995,{7987,0,0},1},{7996,{7988,0,0},1},
    {7997,{7989,0,0},1},{7998,{7990,0,0},1},{7999,{7991,0,0},1},{8008,{8000,0,0},1},
    {8009,{8001,0,0},1},{8010,{8002,0,0},1},{8011,{8003,0,0},1},{8012,{8004,0,0},1},
    {8013,{8005,0,0},1},{8016,{965,787,0},2},{8018,{965,787,768},3},{8020,{965,787,769},3},
    {8022,{965,787,834},3},{8025,{8017,0,0},1},{8027,{8019,0,0},1},{8029,{8021,0,0},1},
    {8031,{8023,0,0},1},{8040,{8032,0,0},1},{8041,{8033,0,0},1},{8042,{8034,0,0},1},
    {8043,{8035,0,0},1},{8044,{8036,0,0},1},{8045,{8037,0,0},1},{8046,{8038,0,0},1},
    {8047,{8039,0,0},1},{8064,{7936,953,0},2},{8065,{7937,953,0},2},{8066,{7938,953,0},2},
    {8067,{7939,953,0},2},{8068,{7940,953,0},2},{8069,{7941,953,0},2},{8070,{7942,953,0},2},
    {8071,{7943,953,0},2},{8072,{7936,953,0},2},{8073,{7937,953,0},2},{8074,{7938,953,0},2},
    {8075,{7939,953,0},2},{8076,{7940,953,0},2},{8077,{7941,953,0},2},{8078,{7942,953,0},2},
    {8079,{7943,953,0},2},{8080,{7968,953,0},2},{8081,{7969,953,0},2},{8082,{7970,953,0},2},
    {8083,{7971,953,0},2},{8084,{7972,953,0},2},{8085,{7973,953,0},2},{8086,{7974,953,0},2},
    {8087,{7975,953,0},2},{8088,{7968,953,0},2},{8089,{7969,953,0},2},{8090,{7970,953,0},2},
    {8091,{7971,953,0},2},{8092,{7972,953,0},2},{8093,{7973,953,0},2},{8094,{7974,953,0},2},
    {8095,{7975,953,0},2},{8096,{8032,953,0},2},{8097,{8033,953,0},2},{8098,{8034,953,0},2},
    {8099,{8035,953,0},2},{8100,{8036,953,0},2},{8101,{8037,953,0},2},{8102,{8038,953,0},2},
    {8103,{8039,953,0},2},{8104,{8032,953,0},2},{8105,{8033,953,0},2},{8106,{8034,953,0},2},
    {8107,{8035,953,0},2},{8108,{8036,953,0},2},{8109,{8037,953,0},2},{8110,{8038,953,0},2},
    {8111,{8039,953,0},2},{8114,{8048,953,0},2},{8115,{945,953,0},2},{8116,{940,953,0},2},
    {8118,{945,834,0},2},{8119,{945,834,953},3},{8120,{8112,0,0},1},{8121,{8113,0,0},1},
    {8122,{8048,0,0},1},{8123,{8049,0,0},1},{8124,{945,953,0},2},{8126,{953,0,0},1},
    {8130,{8052,953,0},2},{8131,{951,953,0},2},{8132,{942,953,0},2},{8134,{951,834,0},2},
    {8135,{951,834,953},3},{8136,{8050,0,0},1},{8137,{8051,0,0},1},{8138,{8052,0,0},1},
    {8139,{8053,0,0},1},{8140,{951,953,0},2},{8146,{953,776,768},3},{8147,{953,776,769},3},
    {8150,{953,834,0},2},{8151,{953,776,834},3},{8152,{8144,0,0},1},{8153,{8145,0,0},1},
    {8154,{8054,0,0},1},{8155,{8055,0,0},1},{8162,{965,776,768},3},{8163,{965,776,769},3},
    {8164,{961,787,0},2},{8166,{965,834,0},2},{8167,{965,776,834},3},{8168,{8160,0,0},1},
    {8169,{8161,0,0},1},{8170,{8058,0,0},1},{8171,{8059,0,0},1},{8172,{8165,0,0},1},
    {8178,{8060,953,0},2},{8179,{969,953,0},2},{8180,{974,953,0},2},{8182,{969,834,0},2},
    {8183,{969,834,953},3},{8184,{8056,0,0},1},{8185,{8057,0,0},1},{8186,{8060,0,0},1},
    {8187,{8061,0,0},1},{8188,{969,953,0},2},{8486,{969,0,0},1},{8490,{107,0,0},1},
    {8491,{229,0,0},1},{8498,{8526,0,0},1},{8544,{8560,0,0},1},{8545,{8561,0,0},1},
    {8546,{8562,0,0},1},{8547,{8563,0,0},1},{8548,{8564,0,0},1},{8549,{8565,0,0},1},
    {8550,{8566,0,0},1},{8551,{8567,0,0},1},{8552,{8568,0,0},1},{8553,{8569,0,0},1},
    {8554,{8570,0,0},1},{8555,{8571,0,0},1},{8556,{8572,0,0},1},{8557,{8573,0,0},1},
    {8558,{8574,0,0},1},{8559,{8575,0,0},1},{8579,{8580,0,0},1},{9398,{9424,0,0},1},
    {9399,{9425,0,0},1},{9400,{9426,0,0},1},{9401,{9427,0,0},1},{9402,{9428,0,0},1},
    {9403,{9429,0,0},1},{9404,{9430,0,0},1},{9405,{9431,0,0},1},{9406,{9432,0,0},1},
    {9407,{9433,0,0},1},{9408,{9434,0,0},1},{9409,{9435,0,0},1},{9410,{9436,0,0},1},
    {9411,{9437,0,0},1},{9412,{9438,0,0},1},{9413,{9439,0,0},1},{9414,{9440,0,0},1},
    {9415,{9441,0,0},1},{9416,{9442,0,0},1},{9417,{9443,0,0},1},{9418,{9444,0,0},1},
    {9419,{9445,0,0},1},{9420,{9446,0,0},1},{9421,{9447,0,0},1},{9422,{9448,0,0},1},
    {9423,{9449,0,0},1},{11264,{11312,0,0},1},{11265,{11313,0,0},1},{11266,{11314,0,0},1},
    {11267,{11315,0,0},1},{11268,{11316,0,0},1},{11269,{11317,0,0},1},{11270,{11318,0,0},1},
    {11271,{11319,0,0},1},{11272,{11320,0,0},1},{11273,{11321,0,0},1},{11274,{11322,0,0},1},
    {11275,{11323,0,0},1},{11276,{11324,0,0},1},{11277,{11325,0,0},1},{11278,{11326,0,0},1},
    {11279,{11327,0,0},1},{11280,{11328,0,0},1},{11281,{11329,0,0},1},{11282,{11330,0,0},1},
    {11283,{11331,0,0},1},{11284,{11332,0,0},1},{11285,{11333,0,0},1},{11286,{11334,0,0},1},
    {11287,{11335,0,0},1},{11288,{11336,0,0},1},{11289,{11337,0,0},1},{11290,{11338,0,0},1},
    {11291,{11339,0,0},1},{11292,{11340,0,0},1},{11293,{11341,0,0},1},{11294,{11342,0,0},1},
    {11295,{11343,0,0},1},{11296,{11344,0,0},1},{11297,{11345,0,0},1},{11298,{11346,0,0},1},
    {11299,{11347,0,0},1},{11300,{11348,0,0},1},{11301,{11349,0,0},1},{11302,{11350,0,0},1},
    {11303,{11351,0,0},1},{11304,{11352,0,0},1},{11305,{11353,0,0},1},{11306,{11354,0,0},1},
    {11307,{11355,0,0},1},{11308,{11356,0,0},1},{11309,{11357,0,0},1},{11310,{11358,0,0},1},
    {11360,{11361,0,0},1},{11362,{619,0,0},1},{11363,{7549,0,0},1},{11364,{637,0,0},1},
    {11367,{11368,0,0},1},{11369,{11370,0,0},1},{11371,{11372,0,0},1},{11373,{593,0,0},1},
    {11374,{625,0,0},1},{11375,{592,0,0},1},{11376,{594,0,0},1},{11378,{11379,0,0},1},
    {11381,{11382,0,0},1},{11390,{575,0,0},1},{11391,{576,0,0},1},{11392,{11393,0,0},1},
    {11394,{11395,0,0},1},{11396,{11397,0,0},1},{11398,{11399,0,0},1},{11400,{11401,0,0},1},
    {11402,{11403,0,0},1},{11404,{11405,0,0},1},{11406,{11407,0,0},1},{11408,{11409,0,0},1},
    {11410,{11411,0,0},1},{11412,{11413,0,0},1},{11414,{11415,0,0},1},{11416,{11417,0,0},1},
    {11418,{11419,0,0},1},{11420,{11421,0,0},1},{11422,{11423,0,0},1},{11424,{11425,0,0},1},
    {11426,{11427,0,0},1},{11428,{11429,0,0},1},{11430,{11431,0,0},1},{11432,{11433,0,0},1},
    {11434,{11435,0,0},1},{11436,{11437,0,0},1},{11438,{11439,0,0},1},{11440,{11441,0,0},1},
    {11442,{11443,0,0},1},{11444,{11445,0,0},1},{11446,{11447,0,0},1},{11448,{11449,0,0},1},
    {11450,{11451,0,0},1},{11452,{11453,0,0},1},{11454,{11455,0,0},1},{11456,{11457,0,0},1},
    {11458,{11459,0,0},1},{11460,{11461,0,0},1},{11462,{11463,0,0},1},{11464,{11465,0,0},1},
    {11466,{11467,0,0},1},{11468,{11469,0,0},1},{11470,{11471,0,0},1},{11472,{11473,0,0},1},
    {11474,{11475,0,0},1},{11476,{11477,0,0},1},{11478,{11479,0,0},1},{11480,{11481,0,0},1},
    {11482,{11483,0,0},1},{11484,{11485,0,0},1},{11486,{11487,0,0},1},{11488,{11489,0,0},1},
    {11490,{11491,0,0},1},{11499,{11500,0,0},1},{11501,{11502,0,0},1},{11506,{11507,0,0},1},
    {42560,{42561,0,0},1},{42562,{42563,0,0},1},{42564,{42565,0,0},1},{42566,{42567,0,0},1},
    {42568,{42569,0,0},1},{42570,{42571,0,0},1},{42572,{42573,0,0},1},{42574,{42575,0,0},1},
    {42576,{42577,0,0},1},{42578,{42579,0,0},1},{42580,{42581,0,0},1},{42582,{42583,0,0},1},
    {42584,{42585,0,0},1},{42586,{42587,0,0},1},{42588,{42589,0,0},1},{42590,{42591,0,0},1},
    {42592,{42593,0,0},1},{42594,{42595,0,0},1},{42596,{42597,0,0},1},{42598,{42599,0,0},1},
    {42600,{42601,0,0},1},{42602,{42603,0,0},1},{42604,{42605,0,0},1},{42624,{42625,0,0},1},
    {42626,{42627,0,0},1},{42628,{42629,0,0},1},{42630,{42631,0,0},1},{42632,{42633,0,0},1},
    {42634,{42635,0,0},1},{42636,{42637,0,0},1},{42638,{42639,0,0},1},{42640,{42641,0,0},1},
    {42642,{42643,0,0},1},{42644,{42645,0,0},1},{42646,{42647,0,0},1},{42648,{42649,0,0},1},
    {42650,{42651,0,0},1},{42786,{42787,0,0},1},{42788,{42789,0,0},1},{42790,{42791,0,0},1},
    {42792,{42793,0,0},1},{42794,{42795,0,0},1},{42796,{42797,0,0},1},{42798,{42799,0,0},1},
    {42802,{42803,0,0},1},{42804,{42805,0,0},1},{42806,{42807,0,0},1},{42808,{42809,0,0},1},
    {42810,{42811,0,0},1},{42812,{42813,0,0},1},{42814,{42815,0,0},1},{42816,{42817,0,0},1},
    {42818,{42819,0,0},1},{42820,{42821,0,0},1},{42822,{42823,0,0},1},{42824,{42825,0,0},1},
    {42826,{42827,0,0},1},{42828,{42829,0,0},1},{42830,{42831,0,0},1},{42832,{42833,0,0},1},
    {42834,{42835,0,0},1},{42836,{42837,0,0},1},{42838,{42839,0,0},1},{42840,{42841,0,0},1},
    {42842,{42843,0,0},1},{42844,{42845,0,0},1},{42846,{42847,0,0},1},{42848,{42849,0,0},1},
    {42850,{42851,0,0},1},{42852,{42853,0,0},1},{42854,{42855,0,0},1},{42856,{42857,0,0},1},
    {42858,{42859,0,0},1},{42860,{42861,0,0},1},{42862,{42863,0,0},1},{42873,{42874,0,0},1},
    {42875,{42876,0,0},1},{42877,{7545,0,0},1},{42878,{42879,0,0},1},{42880,{42881,0,0},1},
    {42882,{42883,0,0},1},{42884,{42885,0,0},1},{42886,{42887,0,0},1},{42891,{42892,0,0},1},
    {42893,{613,0,0},1},{42896,{42897,0,0},1},{42898,{42899,0,0},1},{42902,{42903,0,0},1},
    {42904,{42905,0,0},1},{42906,{42907,0,0},1},{42908,{42909,0,0},1},{42910,{42911,0,0},1},
    {42912,{42913,0,0},1},{42914,{42915,0,0},1},{42916,{42917,0,0},1},{42918,{42919,0,0},1},
    {42920,{42921,0,0},1},{42922,{614,0,0},1},{42923,{604,0,0},1},{42924,{609,0,0},1},
    {42925,{620,0,0},1},{42926,{618,0,0},1},{42928,{670,0,0},1},{42929,{647,0,0},1},
    {42930,{669,0,0},1},{42931,{43859,0,0},1},{42932,{42933,0,0},1},{42934,{42935,0,0},1},
    {42936,{42937,0,0},1},{42938,{42939,0,0},1},{42940,{42941,0,0},1},{42942,{42943,0,0},1},
    {42946,{42947,0,0},1},{42948,{42900,0,0},1},{42949,{642,0,0},1},{42950,{7566,0,0},1},
    {42951,{42952,0,0},1},{42953,{42954,0,0},1},{42997,{42998,0,0},1},{43888,{5024,0,0},1},
    {43889,{5025,0,0},1},{43890,{5026,0,0},1},{43891,{5027,0,0},1},{43892,{5028,0,0},1},
    {43893,{5029,0,0},1},{43894,{5030,0,0},1},{43895,{5031,0,0},1},{43896,{5032,0,0},1},
    {43897,{5033,0,0},1},{43898,{5034,0,0},1},{43899,{5035,0,0},1},{43900,{5036,0,0},1},
    {43901,{5037,0,0},1},{43902,{5038,0,0},1},{43903,{5039,0,0},1},{43904,{5040,0,0},1},
    {43905,{5041,0,0},1},{43906,{5042,0,0},1},{43907,{5043,0,0},1},{43908,{5044,0,0},1},
    {43909,{5045,0,0},1},{43910,{5046,0,0},1},{43911,{5047,0,0},1},{43912,{5048,0,0},1},
    {43913,{5049,0,0},1},{43914,{5050,0,0},1},{43915,{5051,0,0},1},{43916,{5052,0,0},1},
    {43917,{5053,0,0},1},{43918,{5054,0,0},1},{43919,{5055,0,0},1},{43920,{5056,0,0},1},
    {43921,{5057,0,0},1},{43922,{5058,0,0},1},{43923,{5059,0,0},1},{43924,{5060,0,0},1},
    {43925,{5061,0,0},1},{43926,{5062,0,0},1},{43927,{5063,0,0},1},{43928,{5064,0,0},1},
    {43929,{5065,0,0},1},{43930,{5066,0,0},1},{43931,{5067,0,0},1},{43932,{5068,0,0},1},
    {43933,{5069,0,0},1},{43934,{5070,0,0},1},{43935,{5071,0,0},1},{43936,{5072,0,0},1},
    {43937,{5073,0,0},1},{43938,{5074,0,0},1},{43939,{5075,0,0},1},{43940,{5076,0,0},1},
    {43941,{5077,0,0},1},{43942,{5078,0,0},1},{43943,{5079,0,0},1},{43944,{5080,0,0},1},
    {43945,{5081,0,0},1},{43946,{5082,0,0},1},{43947,{5083,0,0},1},{43948,{5084,0,0},1},
    {43949,{5085,0,0},1},{43950,{5086,0,0},1},{43951,{5087,0,0},1},{43952,{5088,0,0},1},
    {43953,{5089,0,0},1},{43954,{5090,0,0},1},{43955,{5091,0,0},1},{43956,{5092,0,0},1},
    {43957,{5093,0,0},1},{43958,{5094,0,0},1},{43959,{5095,0,0},1},{43960,{5096,0,0},1},
    {43961,{5097,0,0},1},{43962,{5098,0,0},1},{43963,{5099,0,0},1},{43964,{5100,0,0},1},
    {43965,{5101,0,0},1},{43966,{5102,0,0},1},{43967,{5103,0,0},1},{64256,{102,102,0},2},
    {64257,{102,105,0},2},{64258,{102,108,0},2},{64259,{102,102,105},3},{64260,{102,102,108},3},
    {64261,{115,116,0},2},{64262,{115,116,0},2},{64275,{1396,1398,0},2},{64276,{1396,1381,0},2},
    {64277,{1396,1387,0},2},{64278,{1406,1398,0},2},{64279,{1396,1389,0},2},{65313,{65345,0,0},1},
    {65314,{65346,0,0},1},{65315,{65347,0,0},1},{65316,{65348,0,0},1},{65317,{65349,0,0},1},
    {65318,{65350,0,0},1},{65319,{65351,0,0},1},{65320,{65352,0,0},1},{65321,{65353,0,0},1},
    {65322,{65354,0,0},1},{65323,{65355,0,0},1},{65324,{65356,0,0},1},{65325,{65357,0,0},1},
    {65326,{65358,0,0},1},{65327,{65359,0,0},1},{65328,{65360,0,0},1},{65329,{65361,0,0},1},
    {65330,{65362,0,0},1},{65331,{65363,0,0},1},{65332,{65364,0,0},1},{65333,{65365,0,0},1},
    {65334,{65366,0,0},1},{65335,{65367,0,0},1},{65336,{65368,0,0},1},{65337,{65369,0,0},1},
    {65338,{65370,0,0},1},{66560,{66600,0,0},1},{66561,{66601,0,0},1},{66562,{66602,0,0},1},
    {66563,{66603,0,0},1},{66564,{66604,0,0},1},{66565,{66605,0,0},1},{66566,{66606,0,0},1},
    {66567,{66607,0,0},1},{66568,{66608,0,0},1},{66569,{66609,0,0},1},{66570,{66610,0,0},1},
    {66571,{66611,0,0},1},{66572,{66612,0,0},1},{66573,{66613,0,0},1},{66574,{66614,0,0},1},
    {66575,{66615,0,0},1},{66576,{66616,0,0},1},{66577,{66617,0,0},1},{66578,{66618,0,0},1},
    {66579,{66619,0,0},1},{66580,{66620,0,0},1},{66581,{66621,0,0},1},{66582,{66622,0,0},1},
    {66583,{66623,0,0},1},{66584,{66624,0,0},1},{66585,{66625,0,0},1},{66586,{66626,0,0},1},
    {66587,{66627,0,0},1},{66588,{66628,0,0},1},{66589,{66629,0,0},1},{66590,{66630,0,0},1},
    {66591,{66631,0,0},1},{66592,{66632,0,0},1},{66593,{66633,0,0},1},{66594,{66634,0,0},1},
    {66595,{66635,0,0},1},{66596,{66636,0,0},1},{66597,{66637,0,0},1},{66598,{66638,0,0},1},
    {66599,{66639,0,0},1},{66736,{66776,0,0},1},{66737,{66777,0,0},1},{66738,{66778,0,0},1},
    {66739,{66779,0,0},1},{66740,{66780,0,0},1},{66741,{66781,0,0},1},{66742,{66782,0,0},1},
    {66743,{66783,0,0},1},{66744,{66784,0,0},1},{66745,{66785,0,0},1},{66746,{66786,0,0},1},
    {66747,{66787,0,0},1},{66748,{66788,0,0},1},{66749,{66789,0,0},1},{66750,{66790,0,0},1},
    {66751,{66791,0,0},1},{66752,{66792,0,0},1},{66753,{66793,0,0},1},{66754,{66794,0,0},1},
    {66755,{66795,0,0},1},{66756,{66796,0,0},1},{66757,{66797,0,0},1},{66758,{66798,0,0},1},
    {66759,{66799,0,0},1},{66760,{66800,0,0},1},{66761,{66801,0,0},1},{66762,{66802,0,0},1},
    {66763,{66803,0,0},1},{66764,{66804,0,0},1},{66765,{66805,0,0},1},{66766,{66806,0,0},1},
    {66767,{66807,0,0},1},{66768,{66808,0,0},1},{66769,{66809,0,0},1},{66770,{66810,0,0},1},
    {66771,{66811,0,0},1},{68736,{68800,0,0},1},{68737,{68801,0,0},1},{68738,{68802,0,0},1},
    {68739,{68803,0,0},1},{68740,{68804,0,0},1},{68741,{68805,0,0},1},{68742,{68806,0,0},1},
    {68743,{68807,0,0},1},{68744,{68808,0,0},1},{68745,{68809,0,0},1},{68746,{68810,0,0},1},
    {68747,{68811,0,0},1},{68748,{68812,0,0},1},{68749,{68813,0,0},1},{68750,{68814,0,0},1},
    {68751,{68815,0,0},1},{68752,{68816,0,0},1},{68753,{68817,0,0},1},{68754,{68818,0,0},1},
    {68755,{68819,0,0},1},{68756,{68820,0,0},1},{68757,{68821,0,0},1},{68758,{68822,0,0},1},
    {68759,{68823,0,0},1},{68760,{68824,0,0},1},{68761,{68825,0,0},1},{68762,{68826,0,0},1},
    {68763,{68827,0,0},1},{68764,{68828,0,0},1},{68765,{68829,0,0},1},{68766,{68830,0,0},1},
    {68767,{68831,0,0},1},{68768,{68832,0,0},1},{68769,{68833,0,0},1},{68770,{68834,0,0},1},
    {68771,{68835,0,0},1},{68772,{68836,0,0},1},{68773,{68837,0,0},1},{68774,{68838,0,0},1},
    {68775,{68839,0,0},1},{68776,{68840,0,0},1},{68777,{68841,0,0},1},{68778,{68842,0,0},1},
    {68779,{68843,0,0},1},{68780,{68844,0,0},1},{68781,{68845,0,0},1},{68782,{68846,0,0},1},
    {68783,{68847,0,0},1},{68784,{68848,0,0},1},{68785,{68849,0,0},1},{68786,{68850,0,0},1},
    {71840,{71872,0,0},1},{71841,{71873,0,0},1},{71842,{71874,0,0},1},{71843,{71875,0,0},1},
    {71844,{71876,0,0},1},{71845,{71877,0,0},1},{71846,{71878,0,0},1},{71847,{71879,0,0},1},
    {71848,{71880,0,0},1},{71849,{71881,0,0},1},{71850,{71882,0,0},1},{71851,{71883,0,0},1},
    {71852,{71884,0,0},1},{71853,{71885,0,0},1},{71854,{71886,0,0},1},{71855,{71887,0,0},1},
    {71856,{71888,0,0},1},{71857,{71889,0,0},1},{71858,{71890,0,0},1},{71859,{71891,0,0},1},
    {71860,{71892,0,0},1},{71861,{71893,0,0},1},{71862,{71894,0,0},1},{71863,{71895,0,0},1},
    {71864,{71896,0,0},1},{71865,{71897,0,0},1},{71866,{71898,0,0},1},{71867,{71899,0,0},1},
    {71868,{71900,0,0},1},{71869,{71901,0,0},1},{71870,{71902,0,0},1},{71871,{71903,0,0},1},
    {93760,{93792,0,0},1},{93761,{93793,0,0},1},{93762,{93794,0,0},1},{93763,{93795,0,0},1},
    {93764,{93796,0,0},1},{93765,{93797,0,0},1},{93766,{93798,0,0},1},{93767,{93799,0,0},1},
    {93768,{93800,0,0},1},{93769,{93801,0,0},1},{93770,{93802,0,0},1},{93771,{93803,0,0},1},
    {93772,{93804,0,0},1},{93773,{93805,0,0},1},{93774,{93806,0,0},1},{93775,{93807,0,0},1},
    {93776,{93808,0,0},1},{93777,{93809,0,0},1},{93778,{93810,0,0},1},{93779,{93811,0,0},1},
    {93780,{93812,0,0},1},{93781,{93813,0,0},1},{93782,{93814,0,0},1},{93783,{93815,0,0},1},
    {93784,{93816,0,0},1},{93785,{93817,0,0},1},{93786,{93818,0,0},1},{93787,{93819,0,0},1},
    {93788,{93820,0,0},1},{93789,{93821,0,0},1},{93790,{93822,0,0},1},{93791,{93823,0,0},1},
    {125184,{125218,0,0},1},{125185,{125219,0,0},1},{125186,{125220,0,0},1},{125187,{125221,0,0},1},
    {125188,{125222,0,0},1},{125189,{125223,0,0},1},{125190,{125224,0,0},1},{125191,{125225,0,0},1},
    {125192,{125226,0,0},1},{125193,{125227,0,0},1},{125194,{125228,0,0},1},{125195,{125229,0,0},1},
    {125196,{125230,0,0},1},{125197,{125231,0,0},1},{125198,{125232,0,0},1},{125199,{125233,0,0},1},
    {125200,{125234,0,0},1},{125201,{125235,0,0},1},{125202,{125236,0,0},1},{125203,{125237,0,0},1},
    {125204,{125238,0,0},1},{125205,{125239,0,0},1},{125206,{125240,0,0},1},{125207,{125241,0,0},1},
    {125208,{125242,0,0},1},{125209,{125243,0,0},1},{125210,{125244,0,0},1},{125211,{125245,0,0},1},
    {125212,{125246,0,0},1},{125213,{125247,0,0},1},{125214,{125248,0,0},1},{125215,{125249,0,0},1},
    {125216,{125250,0,0},1},{125217,{125251,0,0},1}
};

}  // namespace xricl::detail
