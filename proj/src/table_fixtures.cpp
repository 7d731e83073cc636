// Decomposition tables transcribed as data. One entry per line; indented
// lines continue the previous entry.
//
// T1 and T2 columns list multiplicities for every partition of n in
// reverse-lex order. For n > 10 only the entry of the trivial character (n)
// was transcribed.
//
// T3 and T4 blocks use the notation c(parts) with a^b for a repeated b times.

#include "table_fixtures.hpp"

namespace symcon::detail {

const char* const kTable1 = R"(
1: 1
2: 2 0
3: 3 1 1
4: 5 2 3 2 1
5: 7 5 6 5 4 3 1
6: 11 8 15 10 4 13 10 8 5 4 1
7: 15 15 26 19 18 36 19 18 22 28 7 12 10 5 1
8: 22 23 49 33 39 78 44 25 70 67 81 34 35 53 58 52 17 19 19 17 5 2
9: 30 37 79 57 87 154 82 64 188 152 201 75 95 168 207 203 169 52 41 144 104 81 130 84 23 34 39
    21 7 2
10: 42 55 131 91 157 284 148 165 424 327 427 158 52 345 497 614 546 447 124 284 283 200 721 482
    305 492 311 72 194 208 387 177 241 258 128 33 46 65 63 25 9 2
11: 56
12: 77
13: 101
14: 135
15: 176
16: 231
)";

const char* const kTable2 = R"(
1: 1
2: 1 1
3: 2 1 2
4: 2 3 1 3 2
5: 3 4 4 7 4 4 3
6: 4 6 8 12 6 13 12 6 8 6 4
7: 5 9 14 19 14 33 23 19 19 33 19 14 14 9 5
8: 6 13 23 29 29 65 42 13 66 53 89 42 37 53 66 65 29 13 29 23 13 6
9: 8 17 36 44 55 114 72 39 160 121 196 83 82 153 208 208 196 72 43 153 82 121 160 114 44 39 55
    36 17 8
10: 10 23 53 63 92 193 115 93 329 236 382 156 41 280 433 566 525 473 156 237 289 196 721 525 289
    566 382 115 196 237 433 236 280 329 193 63 41 93 92 53 23 10
)";

const char* const kTable3 = R"(
2 A: (2)
2 Abar: (2)
3 A: 2(3) + (1^3)
3 Abar: (3) + (2,1)
4 A: 3(4) + (3,1) + (2^2) + (2,1^2) + (1^4)
4 Abar: 2(4) + (3,1) + 2(2^2) + (2,1^2)
5 A: 4(5) + 2(4,1) + 3(3,2) + 3(3,1^2) + 2(2^2,1) + (2,1^3) + (1^5)
5 Abar: 3(5) + 3(4,1) + 3(3,2) + 2(3,1^2) + 2(2^2,1) + 2(2,1^3)
6 A: 6(6) + 4(5,1) + 7(4,2) + 5(4,1^2) + 2(3^2) + 7(3,2,1) + 5(3,1^3) + 4(2^3) + 2(2^2,1^2) +
    2(2,1^4) + (1^6)
6 Abar: 5(6) + 4(5,1) + 8(4,2) + 5(4,1^2) + 2(3^2) + 6(3,2,1) + 5(3,1^3) + 4(2^3) + 3(2^2,1^2) +
    2(2,1^4)
7 A: 8(7) + 7(6,1) + 13(5,2) + 10(5,1^2) + 9(4,3) + 18(4,2,1) + 9(4,1^3) + 9(3^2,1) + 11(3,2^2)
    + 14(3,2,1^2) + 4(3,1^4) + 6(2^3,1) + 5(2^2,1^3) + 2(2,1^5) + (1^7)
7 Abar: 7(7) + 8(6,1) + 13(5,2) + 9(5,1^2) + 9(4,3) + 18(4,2,1) + 10(4,1^3) + 9(3^2,1) +
    11(3,2^2) + 14(3,2,1^2) + 3(3,1^4) + 6(2^3,1) + 5(2^2,1^3) + 3(2,1^5)
8 A: 12(8) + 11(7,1) + 24(6,2) + 17(6,1^2) + 20(5,3) + 39(5,2,1) + 22(5,1^3) + 12(4^2) +
    35(4,3,1) + 34(4,2^2) + 40(4,2,1^2) + 17(4,1^4) + 17(3^2,2) + 27(3^2,1^2) + 29(3,2^2,1) +
    26(3,2,1^3) + 9(3,1^5) + 9(2^4) + 10(2^3,1^2) + 8(2^2,1^4) + 2(2,1^6) + 2(1^8)
8 Abar: 10(8) + 12(7,1) + 25(6,2) + 16(6,1^2) + 19(5,3) + 39(5,2,1) + 22(5,1^3) + 13(4^2) +
    35(4,3,1) + 33(4,2^2) + 41(4,2,1^2) + 17(4,1^4) + 18(3^2,2) + 26(3^2,1^2) + 29(3,2^2,1) +
    26(3,2,1^3) + 8(3,1^5) + 10(2^4) + 9(2^3,1^2) + 9(2^2,1^4) + 3(2,1^6)
9 A: 16(9) + 18(8,1) + 39(7,2) + 29(7,1^2) + 44(6,3) + 77(6,2,1) + 41(6,1^3) + 32(5,4) +
    94(5,3,1) + 76(5,2^2) + 100(5,2,1^2) + 38(5,1^4) + 47(4^2,1) + 84(4,3,2) + 104(4,3,1^2) +
    102(4,2^2,1) + 84(4,2,1^3) + 26(4,1^5) + 20(3^3) + 72(3^2,2,1) + 52(3^2,1^3) + 40(3,2^3) +
    65(3,2^2,1^2) + 42(3,2,1^4) + 12(3,1^6) + 17(2^4,1) + 20(2^3,1^3) + 10(2^2,1^5) + 3(2,1^7) +
    2(1^9)
9 Abar: 14(9) + 19(8,1) + 40(7,2) + 28(7,1^2) + 43(6,3) + 77(6,2,1) + 41(6,1^3) + 32(5,4) +
    94(5,3,1) + 76(5,2^2) + 101(5,2,1^2) + 37(5,1^4) + 48(4^2,1) + 84(4,3,2) + 103(4,3,1^2) +
    101(4,2^2,1) + 85(4,2,1^3) + 26(4,1^5) + 21(3^3) + 72(3^2,2,1) + 52(3^2,1^3) + 41(3,2^3) +
    65(3,2^2,1^2) + 42(3,2,1^4) + 11(3,1^6) + 17(2^4,1) + 19(2^3,1^3) + 11(2^2,1^5) + 4(2,1^7)
10 A: 22(10) + 27(9,1) + 65(8,2) + 46(8,1^2) + 79(7,3) + 142(7,2,1) + 74(7,1^3) + 82(6,4) +
    212(6,3,1) + 164(6,2^2) + 213(6,2,1^2) + 79(6,1^4) + 26(5^2) + 173(5,4,1) + 248(5,3,2) +
    307(5,3,1^2) + 273(5,2^2,1) + 224(5,2,1^3) + 62(5,1^5) + 142(4^2,2) + 141(4^2,1^2) +
    100(4,3^2) + 361(4,3,2,1) + 241(4,3,1^3) + 152(4,2^3) + 246(4,2^2,1^2) + 155(4,2,1^4) +
    36(4,1^6) + 97(3^3,1) + 104(3^2,2^2) + 193(3^2,2,1^2) + 89(3^2,1^4) + 121(3,2^3,1) +
    129(3,2^2,1^3) + 64(3,2,1^5) + 17(3,1^7) + 23(2^5) + 32(2^4,1^2) + 32(2^3,1^4) + 12(2^2,1^6)
    + 4(2,1^8) + 2(1^10)
10 Abar: 20(10) + 28(9,1) + 66(8,2) + 45(8,1^2) + 78(7,3) + 142(7,2,1) + 74(7,1^3) + 83(6,4) +
    212(6,3,1) + 163(6,2^2) + 214(6,2,1^2) + 79(6,1^4) + 26(5^2) + 172(5,4,1) + 249(5,3,2) +
    307(5,3,1^2) + 273(5,2^2,1) + 223(5,2,1^3) + 62(5,1^5) + 142(4^2,2) + 142(4^2,1^2) +
    100(4,3^2) + 360(4,3,2,1) + 241(4,3,1^3) + 153(4,2^3) + 246(4,2^2,1^2) + 156(4,2,1^4) +
    36(4,1^6) + 97(3^3,1) + 104(3^2,2^2) + 194(3^2,2,1^2) + 88(3^2,1^4) + 120(3,2^3,1) +
    129(3,2^2,1^3) + 64(3,2,1^5) + 16(3,1^7) + 23(2^5) + 33(2^4,1^2) + 31(2^3,1^4) + 13(2^2,1^6)
    + 5(2,1^8)
11 A: 29(11) + 41(10,1) + 100(9,2) + 73(9,1^2) + 142(8,3) + 248(8,2,1) + 125(8,1^3) + 164(7,4) +
    432(7,3,1) + 314(7,2^2) + 426(7,2,1^2) + 151(7,1^4) + 107(6,5) + 465(6,4,1) + 621(6,3,2) +
    738(6,3,1^2) + 645(6,2^2,1) + 519(6,2,1^3) + 140(6,1^5) + 200(5^2,1) + 566(5,4,2) +
    619(5,4,1^2) + 349(5,3^2) + 1188(5,3,2,1) + 769(5,3,1^3) + 432(5,2^3) + 742(5,2^2,1^2) +
    441(5,2,1^4) + 99(5,1^6) + 239(4^2,3) + 644(4^2,2,1) + 384(4^2,1^3) + 560(4,3^2,1) +
    614(4,3,2^2) + 1043(4,3,2,1^2) + 484(4,3,1^4) + 515(4,2^3,1) + 533(4,2^2,1^3) + 254(4,2,1^5)
    + 53(4,1^7) + 202(3^3,2) + 287(3^3,1^2) + 420(3^2,2^2,1) + 410(3^2,2,1^3) + 155(3^2,1^5) +
    146(3,2^4) + 282(3,2^3,1^2) + 223(3,2^2,1^4) + 93(3,2,1^6) + 21(3,1^8) + 53(2^5,1) +
    66(2^4,1^3) + 44(2^3,1^5) + 17(2^2,1^7) + 5(2,1^9) + 2(1^11)
11 Abar: 27(11) + 42(10,1) + 101(9,2) + 72(9,1^2) + 141(8,3) + 248(8,2,1) + 125(8,1^3) +
    164(7,4) + 432(7,3,1) + 314(7,2^2) + 427(7,2,1^2) + 150(7,1^4) + 108(6,5) + 465(6,4,1) +
    621(6,3,2) + 738(6,3,1^2) + 644(6,2^2,1) + 519(6,2,1^3) + 141(6,1^5) + 199(5^2,1) +
    566(5,4,2) + 619(5,4,1^2) + 350(5,3^2) + 1188(5,3,2,1) + 769(5,3,1^3) + 433(5,2^3) +
    742(5,2^2,1^2) + 441(5,2,1^4) + 98(5,1^6) + 239(4^2,3) + 644(4^2,2,1) + 385(4^2,1^3) +
    559(4,3^2,1) + 614(4,3,2^2) + 1043(4,3,2,1^2) + 483(4,3,1^4) + 515(4,2^3,1) + 533(4,2^2,1^3)
    + 255(4,2,1^5) + 53(4,1^7) + 202(3^3,2) + 288(3^3,1^2) + 420(3^2,2^2,1) + 410(3^2,2,1^3) +
    155(3^2,1^5) + 145(3,2^4) + 282(3,2^3,1^2) + 223(3,2^2,1^4) + 93(3,2,1^6) + 20(3,1^8) +
    54(2^5,1) + 66(2^4,1^3) + 43(2^3,1^5) + 18(2^2,1^7) + 6(2,1^9)
12 A: 40(12) + 58(11,1) + 155(10,2) + 112(10,1^2) + 236(9,3) + 414(9,2,1) + 207(9,1^3) +
    318(8,4) + 815(8,3,1) + 586(8,2^2) + 789(8,2,1^2) + 276(8,1^4) + 260(7,5) + 1060(7,4,1) +
    1355(7,3,2) + 1616(7,3,1^2) + 1373(7,2^2,1) + 1099(7,2,1^3) + 288(7,1^5) + 124(6^2) +
    767(6,5,1) + 1679(6,4,2) + 1801(6,4,1^2) + 960(6,3^2) + 3187(6,3,2,1) + 2032(6,3,1^3) +
    1108(6,2^3) + 1891(6,2^2,1^2) + 1106(6,2,1^4) + 236(6,1^6) + 747(5^2,2) + 842(5^2,1^2) +
    1147(5,4,3) + 3016(5,4,2,1) + 1771(5,4,1^3) + 2115(5,3^2,1) + 2211(5,3,2^2) +
    3753(5,3,2,1^2) + 1678(5,3,1^4) + 1682(5,2^3,1) + 1727(5,2^2,1^3) + 793(5,2,1^5) +
    156(5,1^7) + 263(4^3) + 1426(4^2,3,1) + 1294(4^2,2^2) + 2053(4^2,2,1^2) + 888(4^2,1^4) +
    1363(4,3^2,2) + 1901(4,3^2,1^2) + 2592(4,3,2^2,1) + 2466(4,3,2,1^3) + 892(4,3,1^5) +
    684(4,2^4) + 1314(4,2^3,1^2) + 1019(4,2^2,1^4) + 394(4,2,1^6) + 75(4,1^8) + 218(3^4) +
    906(3^3,2,1) + 690(3^3,1^3) + 549(3^2,2^3) + 1132(3^2,2^2,1^2) + 779(3^2,2,1^4) +
    258(3^2,1^6) + 474(3,2^4,1) + 574(3,2^3,1^3) + 357(3,2^2,1^5) + 130(3,2,1^7) + 26(3,1^9) +
    66(2^6) + 114(2^5,1^2) + 112(2^4,1^4) + 61(2^3,1^6) + 24(2^2,1^8) + 5(2,1^10) + 3(1^12)
12 Abar: 37(12) + 60(11,1) + 156(10,2) + 110(10,1^2) + 235(9,3) + 414(9,2,1) + 208(9,1^3) +
    319(8,4) + 815(8,3,1) + 585(8,2^2) + 790(8,2,1^2) + 275(8,1^4) + 259(7,5) + 1060(7,4,1) +
    1356(7,3,2) + 1615(7,3,1^2) + 1373(7,2^2,1) + 1099(7,2,1^3) + 288(7,1^5) + 125(6^2) +
    767(6,5,1) + 1678(6,4,2) + 1802(6,4,1^2) + 960(6,3^2) + 3187(6,3,2,1) + 2032(6,3,1^3) +
    1109(6,2^3) + 1890(6,2^2,1^2) + 1107(6,2,1^4) + 236(6,1^6) + 748(5^2,2) + 841(5^2,1^2) +
    1147(5,4,3) + 3016(5,4,2,1) + 1771(5,4,1^3) + 2115(5,3^2,1) + 2210(5,3,2^2) +
    3754(5,3,2,1^2) + 1677(5,3,1^4) + 1682(5,2^3,1) + 1727(5,2^2,1^3) + 793(5,2,1^5) +
    155(5,1^7) + 263(4^3) + 1426(4^2,3,1) + 1295(4^2,2^2) + 2052(4^2,2,1^2) + 889(4^2,1^4) +
    1363(4,3^2,2) + 1901(4,3^2,1^2) + 2592(4,3,2^2,1) + 2466(4,3,2,1^3) + 892(4,3,1^5) +
    683(4,2^4) + 1315(4,2^3,1^2) + 1018(4,2^2,1^4) + 395(4,2,1^6) + 76(4,1^8) + 218(3^4) +
    906(3^3,2,1) + 690(3^3,1^3) + 550(3^2,2^3) + 1131(3^2,2^2,1^2) + 780(3^2,2,1^4) +
    257(3^2,1^6) + 474(3,2^4,1) + 574(3,2^3,1^3) + 357(3,2^2,1^5) + 130(3,2,1^7) + 24(3,1^9) +
    67(2^6) + 113(2^5,1^2) + 113(2^4,1^4) + 60(2^3,1^6) + 25(2^2,1^8) + 7(2,1^10)
)";

const char* const kTable4 = R"(
2 A: (1^2)
2 Abar: (2)
3 A: (3) + 2(1^3)
3 Abar: (3) + (2,1)
4 A: (4) + 2(3,1) + (2,1^2) + 2(1^4)
4 Abar: (4) + (3,1) + (2^2) + 2(2,1^2)
5 A: (5) + 2(4,1) + 2(3,2) + 4(3,1^2) + 2(2^2,1) + (2,1^3) + 3(1^5)
5 Abar: 2(5) + 2(4,1) + 2(3,2) + 3(3,1^2) + 2(2^2,1) + 3(2,1^3)
6 A: 2(6) + 3(5,1) + 4(4,2) + 6(4,1^2) + 2(3^2) + 7(3,2,1) + 6(3,1^3) + 3(2^3) + 4(2^2,1^2) +
    2(2,1^4) + 4(1^6)
6 Abar: 2(6) + 3(5,1) + 4(4,2) + 6(4,1^2) + 4(3^2) + 6(3,2,1) + 6(3,1^3) + 3(2^3) + 4(2^2,1^2) +
    4(2,1^4)
7 A: 2(7) + 5(6,1) + 7(5,2) + 9(5,1^2) + 7(4,3) + 17(4,2,1) + 11(4,1^3) + 9(3^2,1) + 9(3,2^2) +
    17(3,2,1^2) + 10(3,1^4) + 7(2^3,1) + 7(2^2,1^3) + 3(2,1^5) + 5(1^7)
7 Abar: 3(7) + 4(6,1) + 7(5,2) + 10(5,1^2) + 7(4,3) + 16(4,2,1) + 12(4,1^3) + 10(3^2,1) +
    10(3,2^2) + 16(3,2,1^2) + 9(3,1^4) + 7(2^3,1) + 7(2^2,1^3) + 6(2,1^5)
8 A: 3(8) + 6(7,1) + 12(6,2) + 15(6,1^2) + 14(5,3) + 32(5,2,1) + 21(5,1^3) + 6(4^2) + 34(4,3,1)
    + 27(4,2^2) + 44(4,2,1^2) + 21(4,1^4) + 18(3^2,2) + 26(3^2,1^2) + 33(3,2^2,1) + 33(3,2,1^3)
    + 15(3,1^5) + 6(2^4) + 15(2^3,1^2) + 11(2^2,1^4) + 5(2,1^6) + 6(1^8)
8 Abar: 3(8) + 7(7,1) + 11(6,2) + 14(6,1^2) + 15(5,3) + 33(5,2,1) + 21(5,1^3) + 7(4^2) +
    32(4,3,1) + 26(4,2^2) + 45(4,2,1^2) + 21(4,1^4) + 19(3^2,2) + 27(3^2,1^2) + 33(3,2^2,1) +
    32(3,2,1^3) + 14(3,1^5) + 7(2^4) + 14(2^3,1^2) + 12(2^2,1^4) + 8(2,1^6)
9 A: 4(9) + 9(8,1) + 18(7,2) + 21(7,1^2) + 28(6,3) + 57(6,2,1) + 37(6,1^3) + 19(5,4) + 80(5,3,1)
    + 60(5,2^2) + 98(5,2,1^2) + 41(5,1^4) + 41(4^2,1) + 77(4,3,2) + 104(4,3,1^2) + 104(4,2^2,1)
    + 98(4,2,1^3) + 36(4,1^5) + 20(3^3) + 77(3^2,2,1) + 41(3,2^3) + 60(3^2,1^3) + 80(3,2^2,1^2)
    + 57(3,2,1^4) + 23(3,1^6) + 19(2^4,1) + 28(2^3,1^3) + 18(2^2,1^5) + 6(2,1^7) + 8(1^9)
9 Abar: 4(9) + 8(8,1) + 18(7,2) + 23(7,1^2) + 27(6,3) + 57(6,2,1) + 35(6,1^3) + 20(5,4) +
    80(5,3,1) + 61(5,2^2) + 98(5,2,1^2) + 42(5,1^4) + 41(4^2,1) + 76(4,3,2) + 104(4,3,1^2) +
    104(4,2^2,1) + 98(4,2,1^3) + 36(4,1^5) + 23(3^3) + 76(3^2,2,1) + 41(3,2^3) + 61(3^2,1^3) +
    80(3,2^2,1^2) + 57(3,2,1^4) + 21(3,1^6) + 20(2^4,1) + 27(2^3,1^3) + 18(2^2,1^5) + 11(2,1^7)
10 A: 5(10) + 11(9,1) + 27(8,2) + 32(8,1^2) + 46(7,3) + 96(7,2,1) + 57(7,1^3) + 47(6,4) +
    164(6,3,1) + 118(6,2^2) + 192(6,2,1^2) + 78(6,1^4) + 19(5^2) + 141(5,4,1) + 217(5,3,2) +
    282(5,3,1^2) + 262(5,2^2,1) + 237(5,2,1^3) + 77(5,1^5) + 118(4^2,2) + 144(4^2,1^2) +
    98(4,3^2) + 361(4,3,2,1) + 263(4,3,1^3) + 144(4,2^3) + 283(4,2^2,1^2) + 191(4,2,1^4) +
    58(4,1^6) + 97(3^3,1) + 119(3^2,2^2) + 217(3^2,2,1^2) + 117(3^2,1^4) + 140(3,2^3,1) +
    164(3,2^2,1^3) + 97(3,2,1^5) + 32(3,1^7) + 21(2^5) + 46(2^4,1^2) + 47(2^3,1^4) + 26(2^2,1^6)
    + 9(2,1^8) + 10(1^10)
10 Abar: 5(10) + 12(9,1) + 26(8,2) + 31(8,1^2) + 46(7,3) + 97(7,2,1) + 58(7,1^3) + 46(6,4) +
    165(6,3,1) + 118(6,2^2) + 190(6,2,1^2) + 78(6,1^4) + 22(5^2) + 139(5,4,1) + 216(5,3,2) +
    284(5,3,1^2) + 263(5,2^2,1) + 236(5,2,1^3) + 79(5,1^5) + 119(4^2,2) + 145(4^2,1^2) +
    98(4,3^2) + 360(4,3,2,1) + 262(4,3,1^3) + 145(4,2^3) + 283(4,2^2,1^2) + 191(4,2,1^4) +
    57(4,1^6) + 99(3^3,1) + 118(3^2,2^2) + 216(3^2,2,1^2) + 119(3^2,1^4) + 140(3,2^3,1) +
    165(3,2^2,1^3) + 96(3,2,1^5) + 31(3,1^7) + 20(2^5) + 47(2^4,1^2) + 45(2^3,1^4) + 27(2^2,1^6)
    + 14(2,1^8)
11 A: 6(11) + 16(10,1) + 38(9,2) + 43(9,1^2) + 73(8,3) + 154(8,2,1) + 90(8,1^3) + 92(7,4) +
    307(7,3,1) + 215(7,2^2) + 345(7,2,1^2) + 134(7,1^4) + 67(6,5) + 352(6,4,1) + 498(6,3,2) +
    638(6,3,1^2) + 572(6,2^2,1) + 506(6,2,1^3) + 157(6,1^5) + 159(5^2,1) + 476(5,4,2) +
    568(5,4,1^2) + 315(5,3^2) + 1122(5,3,2,1) + 782(5,3,1^3) + 407(5,2^3) + 782(5,2^2,1^2) +
    505(5,2,1^4) + 135(5,1^6) + 215(4^2,3) + 623(4^2,2,1) + 407(4^2,1^3) + 558(4,3^2,1) +
    624(4,3,2^2) + 1122(4,3,2,1^2) + 572(4,3,1^4) + 567(4,2^3,1) + 639(4,2^2,1^3) + 345(4,2,1^5)
    + 89(4,1^7) + 215(3^3,2) + 314(3^3,1^2) + 476(3^2,2^2,1) + 499(3^2,2,1^3) + 214(3^2,1^5) +
    160(3,2^4) + 351(3,2^3,1^2) + 307(3,2^2,1^4) + 154(3,2,1^6) + 45(3,1^8) + 68(2^5,1) +
    91(2^4,1^3) + 74(2^3,1^5) + 38(2^2,1^7) + 12(2,1^9) + 12(1^11)
11 Abar: 6(11) + 15(10,1) + 38(9,2) + 45(9,1^2) + 74(8,3) + 153(8,2,1) + 88(8,1^3) + 91(7,4) +
    307(7,3,1) + 216(7,2^2) + 345(7,2,1^2) + 137(7,1^4) + 68(6,5) + 351(6,4,1) + 498(6,3,2) +
    640(6,3,1^2) + 571(6,2^2,1) + 504(6,2,1^3) + 156(6,1^5) + 161(5^2,1) + 475(5,4,2) +
    566(5,4,1^2) + 316(5,3^2) + 1122(5,3,2,1) + 783(5,3,1^3) + 407(5,2^3) + 783(5,2^2,1^2) +
    505(5,2,1^4) + 136(5,1^6) + 216(4^2,3) + 625(4^2,2,1) + 407(4^2,1^3) + 555(4,3^2,1) +
    624(4,3,2^2) + 1122(4,3,2,1^2) + 571(4,3,1^4) + 567(4,2^3,1) + 639(4,2^2,1^3) + 345(4,2,1^5)
    + 89(4,1^7) + 216(3^3,2) + 317(3^3,1^2) + 475(3^2,2^2,1) + 497(3^2,2,1^3) + 217(3^2,1^5) +
    160(3,2^4) + 352(3,2^3,1^2) + 307(3,2^2,1^4) + 153(3,2,1^6) + 43(3,1^8) + 67(2^5,1) +
    92(2^4,1^3) + 73(2^3,1^5) + 38(2^2,1^7) + 19(2,1^9)
12 A: 7(12) + 20(11,1) + 54(10,2) + 61(10,1^2) + 114(9,3) + 233(9,2,1) + 133(9,1^3) + 162(8,4) +
    534(8,3,1) + 371(8,2^2) + 588(8,2,1^2) + 225(8,1^4) + 160(7,5) + 752(7,4,1) + 1018(7,3,2) +
    1292(7,3,1^2) + 1132(7,2^2,1) + 984(7,2,1^3) + 292(7,1^5) + 70(6^2) + 576(6,5,1) +
    1326(6,4,2) + 1557(6,4,1^2) + 820(6,3^2) + 2826(6,3,2,1) + 1930(6,3,1^3) + 982(6,2^3) +
    1860(6,2^2,1^2) + 1164(6,2,1^4) + 295(6,1^6) + 638(5^2,2) + 727(5^2,1^2) + 999(5,4,3) +
    2793(5,4,2,1) + 1753(5,4,1^3) + 1994(5,3^2,1) + 2153(5,3,2^2) + 3809(5,3,2,1^2) +
    1859(5,3,1^4) + 1753(5,2^3,1) + 1929(5,2^2,1^3) + 985(5,2,1^5) + 222(5,1^7) + 223(4^3) +
    1396(4^2,3,1) + 1243(4^2,2^2) + 2153(4^2,2,1^2) + 982(4^2,1^4) + 1397(4,3^2,2) +
    1994(4,3^2,1^2) + 2792(4,3,2^2,1) + 2827(4,3,2,1^3) + 1132(4,3,1^5) + 728(4,2^4) +
    1557(4,2^3,1^2) + 1292(4,2^2,1^4) + 588(4,2,1^6) + 134(4,1^8) + 220(3^4) + 1001(3^3,2,1) +
    818(3^3,1^3) + 637(3^2,2^3) + 1326(3^2,2^2,1^2) + 1019(3^2,2,1^4) + 370(3^2,1^6) +
    576(3,2^4,1) + 752(3,2^3,1^3) + 533(3,2^2,1^5) + 234(3,2,1^7) + 62(3,1^9) + 70(2^6) +
    160(2^5,1^2) + 162(2^4,1^4) + 115(2^3,1^6) + 53(2^2,1^8) + 16(2,1^10) + 15(1^12)
12 Abar: 8(12) + 20(11,1) + 53(10,2) + 61(10,1^2) + 114(9,3) + 233(9,2,1) + 135(9,1^3) +
    163(8,4) + 534(8,3,1) + 372(8,2^2) + 587(8,2,1^2) + 222(8,1^4) + 159(7,5) + 752(7,4,1) +
    1018(7,3,2) + 1291(7,3,1^2) + 1132(7,2^2,1) + 986(7,2,1^3) + 295(7,1^5) + 70(6^2) +
    576(6,5,1) + 1325(6,4,2) + 1559(6,4,1^2) + 819(6,3^2) + 2827(6,3,2,1) + 1929(6,3,1^3) +
    982(6,2^3) + 1859(6,2^2,1^2) + 1163(6,2,1^4) + 292(6,1^6) + 638(5^2,2) + 728(5^2,1^2) +
    1002(5,4,3) + 2790(5,4,2,1) + 1752(5,4,1^3) + 1994(5,3^2,1) + 2154(5,3,2^2) +
    3810(5,3,2,1^2) + 1860(5,3,1^4) + 1752(5,2^3,1) + 1930(5,2^2,1^3) + 985(5,2,1^5) +
    225(5,1^7) + 220(4^3) + 1396(4^2,3,1) + 1246(4^2,2^2) + 2154(4^2,2,1^2) + 982(4^2,1^4) +
    1395(4,3^2,2) + 1994(4,3^2,1^2) + 2791(4,3,2^2,1) + 2826(4,3,2,1^3) + 1132(4,3,1^5) +
    727(4,2^4) + 1559(4,2^3,1^2) + 1291(4,2^2,1^4) + 587(4,2,1^6) + 134(4,1^8) + 223(3^4) +
    1000(3^3,2,1) + 821(3^3,1^3) + 639(3^2,2^3) + 1325(3^2,2^2,1^2) + 1017(3^2,2,1^4) +
    373(3^2,1^6) + 576(3,2^4,1) + 752(3,2^3,1^3) + 535(3,2^2,1^5) + 232(3,2,1^7) + 60(3,1^9) +
    70(2^6) + 159(2^5,1^2) + 163(2^4,1^4) + 113(2^3,1^6) + 54(2^2,1^8) + 24(2,1^10)
)";

}  // namespace symcon::detail
