"""Reference table: for each class number h < 100, a discriminant d with
large |d|, the least prime p splitting completely in the Hilbert class
field of Q(sqrt(-d)), and the ratio of p to the lower-bound function,
as published (ratio to 4 decimals).

A human-readable copy lives next to this module in data/table1.csv.
"""

from typing import List, NamedTuple


class TableFixtureRow(NamedTuple):
    h: int
    d: int
    p: int
    ratio_4dp: str


ROWS: List[TableFixtureRow] = [
    TableFixtureRow(*r)
    for r in [
        (1, 163, 41, "4.1557"),
        (2, 427, 107, "2.4287"),
        (3, 907, 227, "2.1188"),
        (4, 1555, 389, "1.9476"),
        (5, 2683, 673, "2.0276"),
        (6, 3763, 941, "1.9222"),
        (7, 5923, 1481, "2.1071"),
        (8, 6307, 1579, "1.7569"),
        (9, 10627, 2657, "2.1729"),
        (10, 13843, 3461, "2.2386"),
        (11, 15667, 3917, "2.0939"),
        (12, 17803, 4451, "1.9938"),
        (13, 20563, 5147, "1.9503"),
        (14, 30067, 7517, "2.3373"),
        (15, 34483, 8623, "2.3173"),
        (16, 31243, 7817, "1.9050"),
        (17, 37123, 9281, "1.9719"),
        (18, 48427, 12107, "2.2225"),
        (19, 38707, 9677, "1.6747"),
        (20, 58507, 14627, "2.1572"),
        (21, 61483, 15373, "2.0614"),
        (22, 85507, 21377, "2.5024"),
        (23, 90787, 22697, "2.4308"),
        (24, 111763, 27941, "2.6847"),
        (25, 93307, 23327, "2.1425"),
        (26, 103027, 25759, "2.1714"),
        (27, 103387, 25847, "2.0351"),
        (28, 126043, 31511, "2.2543"),
        (29, 166147, 41539, "2.6760"),
        (30, 134467, 33617, "2.1037"),
        (31, 133387, 33347, "1.9698"),
        (32, 164803, 41201, "2.2263"),
        (33, 222643, 55661, "2.7216"),
        (34, 189883, 47491, "2.2528"),
        (35, 210907, 52727, "2.3373"),
        (36, 217627, 54409, "2.2819"),
        (37, 158923, 39733, "1.6620"),
        (38, 289963, 72493, "2.6454"),
        (39, 253507, 63377, "2.2500"),
        (40, 260947, 65239, "2.2034"),
        (41, 296587, 74149, "2.3513"),
        (42, 280267, 70067, "2.1445"),
        (43, 300787, 75209, "2.1838"),
        (44, 319867, 79967, "2.2079"),
        (45, 308323, 77081, "2.0542"),
        (46, 462883, 115727, "2.7990"),
        (47, 375523, 93887, "2.2489"),
        (48, 335203, 83813, "1.9638"),
        (49, 393187, 98297, "2.1693"),
        (50, 389467, 97367, "2.0743"),
        (51, 546067, 136519, "2.6772"),
        (52, 439147, 109789, "2.1422"),
        (53, 425107, 106277, "2.0124"),
        (54, 532123, 133033, "2.3604"),
        (55, 452083, 113021, "1.9839"),
        (56, 494323, 123581, "2.0737"),
        (57, 615883, 153991, "2.4279"),
        (58, 586987, 146749, "2.2565"),
        (59, 474307, 118583, "1.8204"),
        (60, 662803, 165701, "2.3566"),
        (61, 606643, 151667, "2.1185"),
        (62, 647707, 161947, "2.1768"),
        (63, 991027, 247759, "3.0559"),
        (64, 693067, 173267, "2.1783"),
        (65, 703123, 175781, "2.1443"),
        (66, 958483, 239623, "2.7278"),
        (67, 652723, 163181, "1.9030"),
        (68, 819163, 204791, "2.2546"),
        (69, 888427, 222107, "2.3556"),
        (70, 811507, 202877, "2.1215"),
        (71, 909547, 227387, "2.2823"),
        (72, 947923, 236981, "2.3061"),
        (73, 886867, 221717, "2.1227"),
        (74, 951043, 237763, "2.2001"),
        (75, 916507, 229127, "2.0792"),
        (76, 1086187, 271549, "2.3521"),
        (77, 1242763, 310693, "2.5821"),
        (78, 1004347, 251087, "2.0958"),
        (79, 1333963, 333491, "2.6208"),
        (80, 1165483, 291371, "2.2775"),
        (81, 1030723, 257687, "2.0011"),
        (82, 1446547, 361637, "2.6277"),
        (83, 1074907, 268729, "1.9851"),
        (84, 1225387, 306347, "2.1765"),
        (85, 1285747, 321443, "2.2210"),
        (86, 1534723, 383681, "2.5366"),
        (87, 1261747, 315437, "2.0941"),
        (88, 1265587, 316403, "2.0564"),
        (89, 1429387, 357347, "2.2395"),
        (90, 1548523, 387137, "2.3529"),
        (91, 1391083, 347771, "2.1002"),
        (92, 1452067, 363017, "2.1371"),
        (93, 1475203, 368801, "2.1244"),
        (94, 1587763, 396943, "2.2212"),
        (95, 1659067, 414767, "2.2638"),
        (96, 1684027, 421009, "2.2501"),
        (97, 1842523, 460633, "2.3882"),
        (98, 2383747, 595939, "2.9359"),
        (99, 1480627, 370159, "1.9012"),
    ]
]

BY_H = {row.h: row for row in ROWS}
