"""Published values for n = 1..13, used to check computed tables.

Each table maps ``n`` to a tuple of integers in the order of ``columns``.
Property columns always appear in the order abelian, cyclic, nilpotent,
solvable, supersolvable, whatever order the source printed them in.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping


@dataclass(frozen=True)
class GoldenTable:
    table_id: str
    columns: tuple[str, ...]
    rows: Mapping[int, tuple[int, ...]]
    source: str

    def column(self, name: str) -> list[int]:
        k = self.columns.index(name)
        return [self.rows[n][k] for n in sorted(self.rows)]

    def value(self, n: int, name: str) -> int:
        return self.rows[n][self.columns.index(name)]


def _table(table_id, columns, rows, source) -> GoldenTable:
    return GoldenTable(table_id, tuple(columns), MappingProxyType(dict(rows)), source)


TABLES: Mapping[str, GoldenTable] = MappingProxyType({
    'classes_S': _table(
        'classes_S',
        ('classes', 'abelian', 'cyclic', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1, 1),
            2: (2, 2, 2, 2, 2, 2),
            3: (4, 3, 3, 3, 4, 4),
            4: (11, 7, 5, 8, 11, 9),
            5: (19, 9, 7, 10, 17, 15),
            6: (56, 20, 11, 25, 50, 38),
            7: (96, 26, 15, 32, 84, 65),
            8: (296, 61, 22, 127, 268, 187),
            9: (554, 82, 30, 156, 485, 341),
            10: (1593, 180, 42, 531, 1418, 923),
            11: (3094, 236, 56, 648, 2691, 1789),
            12: (10723, 594, 77, 3727, 9725, 6118),
            13: (20832, 762, 101, 4221, 18286, 11616),
        },
        'Sequences in S_n (classes of subgroups by property)',
    ),
    'classes_A': _table(
        'classes_A',
        ('classes', 'abelian', 'cyclic', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1, 1),
            2: (1, 1, 1, 1, 1, 1),
            3: (2, 2, 2, 2, 2, 2),
            4: (5, 4, 3, 4, 5, 4),
            5: (9, 5, 4, 5, 8, 7),
            6: (22, 9, 6, 10, 19, 14),
            7: (40, 12, 8, 13, 33, 22),
            8: (137, 30, 12, 53, 122, 70),
            9: (223, 41, 17, 69, 192, 122),
            10: (430, 60, 23, 122, 364, 225),
            11: (788, 81, 29, 160, 650, 395),
            12: (2537, 193, 40, 734, 2194, 1240),
            13: (4558, 243, 52, 848, 3845, 2185),
        },
        'Conjugacy classes of subgroups of A_n',
    ),
    'orders_S': _table(
        'orders_S',
        ('orders', 'missing'),
        {
            1: (1, 0),
            2: (2, 0),
            3: (4, 0),
            4: (8, 0),
            5: (13, 3),
            6: (21, 9),
            7: (31, 29),
            8: (49, 47),
            9: (74, 86),
            10: (113, 157),
            11: (139, 401),
            12: (216, 576),
            13: (268, 1316),
        },
        'Subgroup orders / missing subgroup orders, S_n',
    ),
    'orders_A': _table(
        'orders_A',
        ('orders', 'missing'),
        {
            1: (1, 0),
            2: (1, 0),
            3: (2, 0),
            4: (5, 1),
            5: (9, 3),
            6: (15, 9),
            7: (22, 26),
            8: (38, 46),
            9: (59, 81),
            10: (89, 151),
            11: (115, 365),
            12: (180, 540),
            13: (226, 1214),
        },
        'Subgroup orders / missing subgroup orders, A_n',
    ),
    'marks_sums_S': _table(
        'marks_sums_S',
        ('sum', 'diagonal'),
        {
            1: (1, 1),
            2: (4, 3),
            3: (18, 10),
            4: (146, 47),
            5: (681, 165),
            6: (7518, 950),
            7: (58633, 5632),
            8: (952826, 43772),
            9: (11168496, 376586),
            10: (232255571, 3717663),
            11: (3476965896, 40555909),
            12: (108673489373, 484838080),
            13: (1951392769558, 6286289685),
        },
        'Sum of M(G) / sum of the diagonal, S_n',
    ),
    'totals_S': _table(
        'totals_S',
        ('subgroups',),
        {
            1: (1,),
            2: (2,),
            3: (6,),
            4: (30,),
            5: (156,),
            6: (1455,),
            7: (11300,),
            8: (151221,),
            9: (1694723,),
            10: (29594446,),
            11: (404126228,),
            12: (10594925360,),
            13: (175238308453,),
        },
        'Total number of subgroups, S_n',
    ),
    'incidences_S': _table(
        'incidences_S',
        ('poset', 'lattice'),
        {
            1: (1, 1),
            2: (3, 3),
            3: (9, 11),
            4: (44, 68),
            5: (101, 262),
            6: (523, 2261),
            7: (1195, 14032),
            8: (6751, 176245),
            9: (16986, 1821103),
            10: (87884, 30883491),
            11: (248635, 415843982),
            12: (1709781, 10779423937),
            13: (4665651, 177718085432),
        },
        'Incidences in poset / subgroup lattice, S_n',
    ),
    'edges_S': _table(
        'edges_S',
        ('poset', 'lattice'),
        {
            1: (0, 0),
            2: (1, 1),
            3: (4, 8),
            4: (17, 66),
            5: (37, 501),
            6: (149, 6469),
            7: (290, 60428),
            8: (1080, 926743),
            9: (2267, 11902600),
            10: (8023, 240066343),
            11: (17249, 3677270225),
            12: (72390, 108748156239),
            13: (153419, 1980478458627),
        },
        'Edges in poset / subgroup lattice, S_n',
    ),
    'marks_sums_A': _table(
        'marks_sums_A',
        ('sum', 'diagonal'),
        {
            1: (1, 1),
            2: (1, 1),
            3: (5, 4),
            4: (39, 19),
            5: (192, 73),
            6: (1717, 412),
            7: (13946, 2660),
            8: (243391, 21449),
            9: (2693043, 184541),
            10: (38343715, 1827841),
            11: (545787051, 20043736),
            12: (15787210045, 240206213),
            13: (268796141406, 3119816216),
        },
        'Sum of M(G) / sum of the diagonal, A_n',
    ),
    'totals_A': _table(
        'totals_A',
        ('subgroups',),
        {
            1: (1,),
            2: (1,),
            3: (2,),
            4: (10,),
            5: (59,),
            6: (501,),
            7: (3786,),
            8: (48337,),
            9: (508402,),
            10: (6469142,),
            11: (81711572,),
            12: (2019160542,),
            13: (31945830446,),
        },
        'Total number of subgroups, A_n',
    ),
    'incidences_A': _table(
        'incidences_A',
        ('poset', 'lattice'),
        {
            1: (1, 1),
            2: (1, 1),
            3: (3, 3),
            4: (13, 18),
            5: (32, 85),
            6: (128, 657),
            7: (330, 4374),
            8: (2309, 55711),
            9: (4271, 530502),
            10: (12468, 6603007),
            11: (33329, 82736601),
            12: (196182, 2032940127),
            13: (490137, 32102236563),
        },
        'Incidences in poset / subgroup lattice, A_n',
    ),
    'edges_A': _table(
        'edges_A',
        ('poset', 'lattice'),
        {
            1: (0, 0),
            2: (0, 0),
            3: (1, 1),
            4: (5, 15),
            5: (13, 168),
            6: (44, 2051),
            7: (98, 19305),
            8: (419, 283258),
            9: (722, 3255913),
            10: (1592, 46464854),
            11: (3304, 670282962),
            12: (12645, 18723796793),
            13: (24792, 321480817412),
        },
        'Edges in poset / subgroup lattice, A_n',
    ),
    'maxp_S': _table(
        'maxp_S',
        ('abelian', 'cyclic', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1),
            2: (1, 1, 1, 1, 1),
            3: (2, 2, 2, 1, 1),
            4: (4, 3, 2, 1, 2),
            5: (5, 3, 3, 3, 3),
            6: (7, 5, 5, 4, 4),
            7: (10, 6, 6, 5, 5),
            8: (17, 11, 7, 6, 6),
            9: (23, 15, 9, 9, 8),
            10: (30, 20, 12, 12, 11),
            11: (41, 24, 15, 14, 14),
            12: (61, 34, 20, 17, 19),
            13: (80, 43, 25, 24, 23),
        },
        'Maximal property-P classes of S_n',
    ),
    'maxp_A': _table(
        'maxp_A',
        ('abelian', 'cyclic', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1),
            2: (1, 1, 1, 1, 1),
            3: (1, 1, 1, 1, 1),
            4: (2, 2, 2, 1, 2),
            5: (3, 3, 3, 3, 3),
            6: (5, 4, 3, 4, 3),
            7: (6, 5, 5, 5, 4),
            8: (13, 6, 6, 6, 6),
            9: (19, 8, 7, 10, 8),
            10: (22, 10, 9, 12, 10),
            11: (27, 14, 12, 14, 13),
            12: (40, 20, 17, 17, 18),
            13: (54, 24, 20, 24, 22),
        },
        'Maximal property-P classes of A_n',
    ),
    'maxp_totals_S': _table(
        'maxp_totals_S',
        ('abelian', 'cyclic', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1),
            2: (1, 1, 1, 1, 1),
            3: (4, 4, 4, 1, 1),
            4: (11, 13, 7, 1, 7),
            5: (51, 31, 31, 21, 31),
            6: (241, 246, 211, 76, 101),
            7: (1506, 1296, 1156, 456, 491),
            8: (9649, 10774, 5419, 1956, 3011),
            9: (80281, 83238, 40027, 12136, 18467),
            10: (640741, 788820, 348331, 80836, 114983),
            11: (6196576, 6835170, 3204796, 807676, 1283723),
            12: (66883411, 81364944, 38422891, 8779816, 13380643),
            13: (775421219, 848378532, 467645179, 104127596, 148321603),
        },
        'Total number of maximal property-P subgroups of S_n',
    ),
    'maxp_totals_A': _table(
        'maxp_totals_A',
        ('abelian', 'cyclic', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1),
            2: (1, 1, 1, 1, 1),
            3: (3, 3, 3, 3, 3),
            4: (10, 9, 10, 1, 10),
            5: (30, 30, 30, 36, 40),
            6: (115, 100, 110, 225, 110),
            7: (861, 665, 1001, 686, 645),
            8: (10536, 3885, 4005, 4655, 5670),
            9: (78474, 33093, 45696, 28728, 47754),
            10: (1008000, 371700, 379155, 397005, 311850),
            11: (9302964, 3790875, 4913040, 2210890, 3014550),
            12: (73024380, 37839285, 36701280, 26975025, 24022845),
            13: (563291872, 350984414, 158538380, 26121667, 46950904),
        },
        'Total number of maximal property-P subgroups of A_n',
    ),
    'weighted_S': _table(
        'weighted_S',
        ('subgroups', 'abelian', 'cyclic', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1, 1),
            2: (2, 2, 2, 2, 2, 2),
            3: (6, 5, 5, 5, 6, 6),
            4: (30, 21, 17, 24, 30, 28),
            5: (156, 87, 67, 102, 154, 144),
            6: (1455, 612, 362, 837, 1429, 1259),
            7: (11300, 3649, 2039, 5119, 11065, 9560),
            8: (151221, 35515, 14170, 78670, 148817, 123102),
            9: (1694723, 289927, 109694, 664658, 1667697, 1371022),
            10: (29594446, 3771118, 976412, 13514453, 29103894, 23449585),
            11: (404126228, 36947363, 8921002, 137227213, 396571224, 317178020),
            12: (10594925360, 657510251, 101134244, 4919721831, 10450152905, 8296640115),
            13: (175238308453, 7736272845, 1104940280, 60598902665, 172658168937, 136245390535),
        },
        'Total number of subgroups of S_n by property',
    ),
    'weighted_A': _table(
        'weighted_A',
        ('subgroups', 'abelian', 'cyclic', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1, 1),
            2: (1, 1, 1, 1, 1, 1),
            3: (2, 2, 2, 2, 2, 2),
            4: (10, 9, 8, 9, 10, 9),
            5: (59, 37, 32, 37, 58, 53),
            6: (501, 207, 167, 252, 488, 418),
            7: (3786, 1192, 947, 1507, 3664, 2894),
            8: (48337, 11449, 6974, 21739, 47210, 33675),
            9: (508402, 93673, 53426, 186983, 498102, 369763),
            10: (6469142, 892783, 454682, 2369258, 6293475, 4769542),
            11: (81711572, 8534308, 4303532, 22872863, 78805290, 58853842),
            12: (2019160542, 148561283, 50366912, 746597568, 1960342409, 1395051100),
            13: (31945830446, 1740198891, 553031624, 9157758326, 31130243721, 21847262156),
        },
        'Total number of subgroups of A_n by property',
    ),
    'redblue': _table(
        'redblue',
        ('classes_S', 'classes_A', 'blue', 'red'),
        {
            1: (1, 1, 1, 0),
            2: (2, 1, 1, 1),
            3: (4, 2, 2, 2),
            4: (11, 5, 5, 6),
            5: (19, 9, 9, 10),
            6: (56, 22, 22, 34),
            7: (96, 40, 37, 59),
            8: (296, 137, 112, 184),
            9: (554, 223, 195, 359),
            10: (1593, 430, 423, 1170),
            11: (3094, 788, 780, 2314),
            12: (10723, 2537, 2401, 8322),
            13: (20832, 4558, 4409, 16423),
        },
        'Red and blue subgroups of S_n',
    ),
    'connected_S': _table(
        'connected_S',
        ('classes', 'abelian', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1),
            2: (2, 1, 1, 1, 1),
            3: (4, 1, 1, 2, 2),
            4: (11, 3, 4, 6, 4),
            5: (19, 1, 1, 4, 4),
            6: (56, 6, 9, 23, 15),
            7: (96, 1, 1, 16, 13),
            8: (296, 17, 69, 122, 81),
            9: (554, 5, 8, 109, 77),
            10: (1593, 40, 238, 551, 352),
            11: (3094, 2, 2, 570, 406),
            12: (10723, 162, 2339, 4633, 2995),
            13: (20832, 5, 8, 4224, 2866),
        },
        'Connected subgroups of S_n',
    ),
    'connected_A': _table(
        'connected_A',
        ('classes', 'abelian', 'nilpotent', 'solvable', 'supersolvable'),
        {
            1: (1, 1, 1, 1, 1),
            2: (1, 0, 0, 0, 0),
            3: (2, 1, 1, 1, 1),
            4: (5, 2, 2, 3, 2),
            5: (9, 1, 1, 3, 3),
            6: (22, 3, 4, 10, 6),
            7: (40, 1, 1, 11, 6),
            8: (137, 14, 36, 80, 42),
            9: (223, 5, 9, 52, 39),
            10: (430, 12, 49, 145, 85),
            11: (788, 2, 2, 165, 104),
            12: (2537, 69, 489, 1208, 686),
            13: (4558, 3, 4, 1033, 617),
        },
        'Connected subgroups of A_n',
    ),
})

# single sequences, terms for n = 1..13
SEQUENCES: Mapping[str, tuple[int, ...]] = MappingProxyType({
    'A218967': (1, 0, 1, 3, 4, 12, 15, 87, 64, 168, 205, 1336, 1198),
    'A218968': (1, 0, 1, 3, 4, 12, 12, 65, 58, 167, 198, 1207, 1178),
    'A218969': (0, 1, 1, 3, 2, 15, 8, 65, 66, 431, 443, 3643, 3594),
    'A218970': (1, 1, 1, 2, 1, 4, 1, 5, 3, 8, 2, 14, 3),
    'A218975': (1, 0, 1, 1, 1, 2, 1, 3, 3, 4, 2, 8, 2),
})

# table of marks of S_4 in canonical class order, with class labels
MARKS_S4_LABELS = ("1", "2", "2", "3", "2^2", "2^2", "4", "S3", "D8", "A4", "S4")
MARKS_S4 = (
    (24,),
    (12, 4),
    (12, 0, 2),
    (8, 0, 0, 2),
    (6, 6, 0, 0, 6),
    (6, 2, 2, 0, 0, 2),
    (6, 2, 0, 0, 0, 0, 2),
    (4, 0, 2, 1, 0, 0, 0, 1),
    (3, 3, 1, 0, 3, 1, 1, 0, 1),
    (2, 2, 0, 2, 2, 0, 0, 0, 0, 2),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
)


def get(table_id: str) -> GoldenTable:
    try:
        return TABLES[table_id]
    except KeyError:
        raise KeyError(f"no golden table {table_id!r}; known: {', '.join(sorted(TABLES))}") from None
