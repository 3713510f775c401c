#!/usr/bin/env python3
"""Build the demonstration corpus JSON from the aggregate fixture tables.

The corpus is synthesized deterministically (no randomness) so that every
aggregate the toolkit computes from it reproduces the case-study tables
shipped in fixtures/: per-year article and authorship counts, the
author-productivity distribution, collaboration patterns and country
splits, affiliation-type breakdowns, reference volumes/formats/ages,
journal citation ranking, self-citation, keyword and title statistics,
funding, received citations and impact factors.

Usage:
    python scripts/build_corpus_fixture.py [--out fixtures/mjm_2004_2008.json]

The builder asserts every target marginal; a failing assert means the plan
tables below are inconsistent, not that input data changed.
"""

from __future__ import annotations

import argparse
import csv
import json
from collections import Counter
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

JOURNAL = "Medical Journal of Malaysia"
YEARS = (2004, 2005, 2006, 2007, 2008)

ARTICLES = {2004: 139, 2005: 102, 2006: 104, 2007: 100, 2008: 135}
AUTHORSHIPS = {2004: 478, 2005: 367, 2006: 412, 2007: 352, 2008: 568}
FOREIGN_AUTHORSHIPS = {2004: 40, 2005: 33, 2006: 18, 2007: 28, 2008: 76}

# authors-per-article histogram per year (bin -> articles)
SIZE_HIST = {
    2004: {1: 17, 2: 23, 3: 39, 4: 25, 5: 20, 6: 9, 7: 4, 8: 2},
    2005: {1: 13, 2: 21, 3: 26, 4: 12, 5: 14, 6: 8, 7: 3, 8: 3, 11: 1, 12: 1},
    2006: {1: 9, 2: 18, 3: 20, 4: 23, 5: 14, 6: 12, 7: 3, 8: 2, 10: 1, 11: 1, 15: 1},
    2007: {1: 7, 2: 19, 3: 25, 4: 25, 5: 15, 6: 8, 9: 1},
    2008: {1: 10, 2: 15, 3: 25, 4: 29, 5: 24, 6: 18, 7: 8, 8: 4, 9: 1, 12: 1},
}

# collaboration classes per year: single / same affiliation / different
# affiliations same country / different countries
CLASS_COUNTS = {
    2004: (17, 68, 51, 3),
    2005: (13, 49, 33, 7),
    2006: (9, 64, 25, 6),
    2007: (7, 63, 24, 6),
    2008: (10, 68, 47, 10),
}

# mixed home+foreign articles: (year, {country: foreign authors}, home authors)
MIXED_PLAN = [
    (2004, {"Australia": 2}, 2),
    (2004, {"India": 2}, 1),
    (2004, {"Japan": 1}, 2),
    (2005, {"Australia": 2}, 2),
    (2005, {"India": 2}, 2),
    (2005, {"UK": 1}, 2),
    (2005, {"Singapore": 2}, 2),
    (2005, {"Japan": 2}, 3),
    (2005, {"Saudi Arabia": 1}, 2),
    (2005, {"France": 1}, 2),
    (2006, {"Australia": 2}, 2),
    (2006, {"India": 2}, 2),
    (2006, {"UK": 1}, 2),
    (2006, {"Singapore": 1}, 2),
    (2006, {"Canada": 1}, 2),
    (2006, {"Pakistan": 1}, 2),
    (2007, {"Australia": 1}, 2),
    (2007, {"India": 2}, 2),
    (2007, {"UK": 2}, 2),
    (2007, {"USA": 2}, 2),
    (2007, {"Australia": 1, "USA": 1}, 2),
    (2008, {"Australia": 2}, 2),
    (2008, {"Australia": 2}, 2),
    (2008, {"Australia": 2}, 2),
    (2008, {"UK": 2}, 2),
    (2008, {"Singapore": 2}, 2),
    (2008, {"USA": 2}, 3),
    (2008, {"India": 2}, 3),
]

# purely-foreign articles: (year, {country: authors}, layout)
# layout: "same" = one affiliation, "diff" = several affiliations one country,
# "multi" = several countries (class: different countries)
FOREIGN_PLAN = [
    (2004, {"Turkey": 6}, "diff"),
    (2004, {"Turkey": 5}, "same"),
    (2004, {"Turkey": 3}, "same"),
    (2004, {"Singapore": 5}, "same"),
    (2004, {"Singapore": 4}, "same"),
    (2004, {"India": 5}, "same"),
    (2004, {"Iran": 3}, "same"),
    (2004, {"Indonesia": 2}, "same"),
    (2004, {"Australia": 1}, "same"),
    (2004, {"UK": 1}, "same"),
    (2005, {"Singapore": 4}, "same"),
    (2005, {"Turkey": 5}, "same"),
    (2005, {"Yemen": 2}, "same"),
    (2005, {"India": 6}, "diff"),
    (2005, {"Iran": 5}, "same"),
    (2006, {"Saudi Arabia": 2}, "same"),
    (2006, {"France": 2}, "same"),
    (2006, {"Iran": 6}, "diff"),
    (2007, {"USA": 1, "India": 2}, "multi"),
    (2007, {"Turkey": 3}, "same"),
    (2007, {"Turkey": 3}, "same"),
    (2007, {"Ireland": 2}, "same"),
    (2007, {"Singapore": 3}, "same"),
    (2007, {"India": 3}, "same"),
    (2007, {"India": 2}, "same"),
    (2008, {"Indonesia": 2, "Netherlands": 2}, "multi"),
    (2008, {"Indonesia": 2, "Netherlands": 2}, "multi"),
    (2008, {"Indonesia": 3, "Netherlands": 2}, "multi"),
    (2008, {"Indonesia": 3}, "same"),
    (2008, {"Indonesia": 3}, "same"),
    (2008, {"Japan": 6}, "same"),
    (2008, {"Japan": 6}, "diff"),
    (2008, {"Japan": 4}, "diff"),
    (2008, {"Singapore": 4}, "same"),
    (2008, {"India": 4}, "same"),
    (2008, {"India": 3}, "same"),
    (2008, {"UK": 4}, "diff"),
    (2008, {"UK": 4}, "diff"),
    (2008, {"USA": 4}, "same"),
    (2008, {"Turkey": 2}, "same"),
    (2008, {"Australia": 2}, "same"),
]

# second articles for two-paper foreign authors, per country
FOREIGN_DOUBLES = {"Australia": 2, "USA": 1, "UK": 2, "India": 2, "Singapore": 1,
                   "Japan": 4, "Indonesia": 2, "Netherlands": 2}

ORIGINALS = {2004: 72, 2005: 77, 2006: 68, 2007: 66, 2008: 63}
EDITORIALS = {2004: 7, 2005: 7, 2006: 7, 2007: 7, 2008: 6}
OTHER_TYPES = ("cme", "case_report", "short_communication", "correspondence", "other")

# references per year by bibliographic format
REF_FORMATS = {
    "journal": {2004: 1636, 2005: 1186, 2006: 1048, 2007: 1123, 2008: 1107},
    "book": {2004: 95, 2005: 77, 2006: 65, 2007: 38, 2008: 58},
    "conference": {2004: 17, 2005: 17, 2006: 8, 2007: 4, 2008: 13},
    "web": {2004: 13, 2005: 14, 2006: 5, 2007: 10, 2008: 10},
    "government": {2004: 56, 2005: 29, 2006: 43, 2007: 45, 2008: 20},
    "international_org": {2004: 22, 2005: 10, 2006: 4, 2007: 10, 2008: 9},
    "thesis": {2004: 5, 2005: 2, 2006: 1, 2007: 1, 2008: 1},
    "newspaper": {2004: 29, 2005: 10, 2006: 13, 2007: 13, 2008: 6},
    "other": {2004: 25, 2005: 19, 2006: 13, 2007: 14, 2008: 14},
}
REFS_PER_YEAR = {y: sum(fmt[y] for fmt in REF_FORMATS.values()) for y in YEARS}

SELF_CITATIONS = {2004: 58, 2005: 31, 2006: 30, 2007: 28, 2008: 26}
SELF_CITING_ARTICLES = {2004: 25, 2005: 18, 2006: 17, 2007: 16, 2008: 14}

# references-per-article bucket plan: year -> {representative count: articles}
REF_BUCKETS = [(0, 10), (11, 20), (21, 30), (31, 40), (41, 50),
               (51, 60), (61, 70), (71, 80), (81, 90)]
REF_BUCKET_PLAN = {
    2004: {5: 71, 15: 40, 25: 18, 35: 6, 45: 1, 55: 1, 75: 1, 85: 1},
    2005: {5: 53, 15: 28, 25: 13, 35: 4, 45: 1, 55: 1, 65: 1, 75: 1},
    2006: {5: 59, 15: 28, 25: 12, 35: 3, 45: 1, 55: 1},
    2007: {5: 52, 15: 28, 25: 13, 35: 4, 45: 1, 55: 1, 65: 1},
    2008: {5: 90, 15: 32, 25: 11, 35: 2},
}

# publication year of references per citing year (columns 2008..2004)
PUB_YEAR_MATRIX = [
    (2008, 26, 0, 0, 0, 0), (2007, 65, 10, 0, 0, 0), (2006, 100, 46, 6, 0, 0),
    (2005, 101, 86, 32, 14, 0), (2004, 116, 81, 85, 44, 17), (2003, 110, 110, 85, 78, 43),
    (2002, 78, 110, 62, 122, 99), (2001, 72, 89, 100, 108, 113), (2000, 81, 95, 80, 84, 139),
    (1999, 55, 90, 82, 102, 153), (1998, 68, 54, 82, 108, 114), (1997, 49, 69, 71, 82, 111),
    (1996, 34, 42, 52, 76, 98), (1995, 31, 40, 42, 81, 109), (1994, 32, 27, 40, 48, 100),
    (1993, 38, 28, 44, 63, 76), (1992, 21, 27, 38, 41, 72), (1991, 15, 31, 40, 27, 72),
    (1990, 17, 20, 26, 25, 76), (1989, 10, 22, 18, 23, 47), (1988, 13, 15, 23, 18, 40),
    (1987, 14, 14, 16, 23, 34), (1986, 3, 14, 16, 19, 32), (1985, 11, 13, 22, 15, 36),
    (1984, 6, 9, 16, 16, 35), (1983, 6, 18, 9, 14, 25), (1982, 2, 5, 15, 10, 27),
    (1981, 4, 8, 12, 12, 25), (1980, 3, 12, 12, 12, 14), (1979, 2, 7, 8, 13, 22),
    (1978, 5, 3, 7, 16, 18), (1977, 3, 5, 5, 3, 15), (1976, 9, 3, 4, 8, 11),
    (1975, 8, 4, 6, 3, 15), (1974, 3, 1, 4, 5, 10), (1973, 1, 4, 1, 1, 7),
    (1972, 0, 2, 1, 4, 11), (1971, 2, 6, 5, 1, 9), (1970, 1, 1, 0, 1, 4),
    (1969, 2, 2, 0, 6, 9), (1968, 0, 2, 3, 1, 1), (1967, 1, 3, 5, 1, 7),
    (1966, 1, 2, 0, 2, 3), (1965, 1, 2, 2, 0, 0), (1964, 1, 1, 2, 1, 4),
    (1963, 0, 0, 1, 2, 2), (1962, 0, 1, 0, 2, 2), (1961, 1, 1, 1, 1, 5),
    (1960, 0, 1, 1, 1, 0), (1959, 0, 0, 0, 0, 1), (1958, 1, 0, 0, 0, 3),
    (1957, 1, 1, 0, 1, 1), (1956, 0, 0, 1, 3, 3), (1955, 0, 1, 0, 0, 0),
    (1954, 0, 0, 0, 1, 0), (1953, 0, 1, 0, 0, 0), (1952, 1, 0, 0, 0, 2),
    (1951, 0, 0, 0, 0, 2), (1950, 0, 0, 0, 2, 1),
    ("old", 5, 9, 9, 7, 9), ("undated", 8, 10, 8, 13, 14),
]
OLD_PUB_YEARS = (1949, 1945, 1940, 1935, 1930, 1925, 1920, 1915, 1910, 1905)

LANGUAGES_BY_TITLE = {
    "Changgeng Yi Xue Za Zhi": "Chinese",
    "Chung Hua Liu Hsing Ping Hsueh Tsa Chih": "Chinese",
    "Chung Hua-I-Hsued-Tsa-Chih-Taipei": "Chinese",
    "Yi Xue Ke Xue Za Zhi": "Chinese",
    "Zhonghua Nei Ke Za Zhi": "Chinese",
    "Zhonghua Xue Ye Xue Za Zhi": "Chinese",
    "Zhonghua Yi Xue Za Zhi": "Chinese",
    "Gan To Kagaku Ryoho": "Japanese",
    "Nippon Ketsueki Gakkai Zassho": "Japanese",
    "No Shinkei Geka": "Japanese",
    "Yakugaku Zasshi": "Japanese",
    "Kansenshogaku Zasshi": "Japanese",
    "Nihoh Kyobu Shikkan Gakki Zasshi": "Japanese",
    "Kao Hsiung I Hsueh Ko Hsueh Tsa Chih": "Taiwanese",
    "Revue de Chirurgie Orthopedique et Raparatrice de la Appareil Moteur": "French",
    "Medicina del Lavoro": "Italian",
    "Cadernos de Saude publica": "Portuguese",
    "Ginecologiy Obstetricia de Mexico": "Mexican",
    "Deutsch Medicine wochenschr": "Dutch",
}

KEYWORDS_PER_ARTICLE = {0: 34, 1: 17, 2: 96, 3: 188, 4: 131, 5: 68, 6: 34,
                        7: 4, 8: 6, 9: 1, 10: 1}
TITLE_WORDS = {2: 4, 3: 9, 4: 14, 5: 26, 6: 45, 7: 50, 8: 45, 9: 57, 10: 43,
               11: 51, 12: 44, 13: 44, 14: 39, 15: 21, 16: 24, 17: 18, 18: 12,
               19: 15, 20: 8, 21: 5, 22: 3, 23: 1, 25: 1, 26: 1}

FUNDERS = [
    ("eScience Fund grant", {2008: 1}),
    ("International Islamic University Research Center", {2005: 2, 2006: 1, 2008: 1}),
    ("International Medical University", {2006: 3, 2007: 3, 2008: 1}),
    ("Iranian budget and programming organization", {2004: 1}),
    ("Johor State Health Dept", {2004: 1}),
    ("Toray Sci. Foundation, Japan for UM", {2006: 1}),
    ("Meditel electronics Sdn Bhd and Agfa ASEAN", {2006: 1}),
    ("Melaka Manipal Medical College", {2007: 1}),
    ("Ministry of Health", {2004: 1, 2008: 1}),
    ("Ministry of Sc and Tech (Top down, IRPA) Grant", {2004: 5, 2005: 3, 2006: 3, 2008: 2}),
    ("Ministry of Sport Malaysia, Malaysian Road Safety Council", {2004: 1}),
    ("National Biotechnology Directorate (NBD) under the 8th MP", {2005: 1}),
    ("National Research Council, Iran", {2006: 1}),
    ("Novartis Malaysia", {2005: 1}),
    ("Novo Nordisk Asia", {2005: 1}),
    ("Renal research fund of Malaysian Society of Nephrology", {2004: 1}),
    ("Selangor State Health Dept.", {2007: 1}),
    ("UNIMAS short term grant", {2005: 1}),
    ("Universiti Tecknology Mara, Institute of Res. Dev. and Comm", {2007: 1}),
    ("Universiti Kebangsaan Malaysia, Fundamental and other grants", {2004: 3, 2007: 1, 2008: 2}),
    ("Universiti Kebangsaan Malaysia, Faculty of Medicine", {2007: 1}),
    ("University of Malaya short term grant (F Vote)", {2005: 1, 2007: 2}),
    ("University of Malaya. Res and Dev. Management Unit", {2004: 1}),
    ("University of Medical Sciences, Tehran, Iran", {2006: 1}),
    ("University Putra Malaysia", {2006: 1}),
    ("USM (FRGS, short term research grant)", {2004: 3, 2006: 1, 2007: 1, 2008: 1}),
    ("Yayasan FELDA, Kuala Lumpur", {2004: 1}),
]

# citations received: pub year -> (articles cited, {citing year: citations})
RECEIVED = {
    2004: (129, {2004: 10, 2005: 39, 2006: 82, 2007: 93, 2008: 100, 2009: 80, 2010: 48}),
    2005: (102, {2005: 2, 2006: 28, 2007: 62, 2008: 72, 2009: 73, 2010: 31}),
    2006: (102, {2006: 7, 2007: 65, 2008: 61, 2009: 93, 2010: 44}),
    2007: (56, {2007: 1, 2008: 14, 2009: 54, 2010: 32}),
    2008: (57, {2008: 7, 2009: 35, 2010: 31}),
}
CITING_DOC_TYPES = [("journal_article", 1082), ("thesis", 40), ("book", 22),
                    ("conference", 11), ("government", 9)]
CITING_SOURCES = [("Malaysian Family Physicians", 19), ("Medical Journal of Malaysia", 17),
                  ("Chinese Journal of Clinical Rehabilitation", 14), ("Singapore Medical Journal", 13),
                  ("Journal of Bone and Joint Surgery AM", 11), ("BMC Med", 10),
                  ("Journal of Biomedical Materials Research Part A", 10),
                  ("Asian Pacific Journal of Cancer", 8), ("Malaysian Journal of Medical Sciences", 8),
                  ("Journal of Pediatric Surgery", 7)]
NO_COUNTRY_CITATIONS = 26
CITING_COUNTRIES = [
    ("China", 227), ("Malaysia", 171), ("United States", 123), ("India", 43),
    ("United Kingdom", 40), ("Germany", 35), ("Australia", 35), ("Brazil", 31),
    ("Spain", 27), ("France", 21), ("Turkey", 20), ("Canada", 18), ("Italy", 17),
    ("Korea", 14), ("Singapore", 12), ("Israel", 12), ("Iran", 12), ("Greece", 11),
    ("Japan", 11), ("Netherlands", 10), ("Switzerland", 10), ("Cuba", 10),
    ("Pakistan", 10), ("Nigeria", 9), ("Russia", 9), ("Columbia", 9), ("Egypt", 8),
    ("Saudi Arabia", 8), ("Taiwan", 6), ("Mexico", 5), ("Portugal", 5), ("Nepal", 5),
    ("Jordan", 4), ("South Africa", 3), ("Venezuela", 3), ("Argentina", 3),
    ("Czech Republic", 3), ("Ireland", 3), ("Poland", 3), ("Slovakia", 3),
    ("Bangladesh", 3), ("Uruguay", 2), ("Denmark", 2), ("Serbia", 2), ("Sweden", 2),
    ("Thailand", 2), ("Iraq", 2), ("Lebanon", 2), ("UAE", 2), ("Uganda", 1),
    ("Tunisia", 1), ("Kenya", 1), ("Chile", 1), ("Peru", 1), ("Bolivia", 1),
    ("Cyprus", 1), ("Finland", 1), ("Lithuania", 1), ("Norway", 1), ("Romania", 1),
    ("Ukraine", 1), ("Armenia", 1), ("Austria", 1), ("Vietnam", 1), ("Brunei", 1),
    ("Kuwait", 1), ("Oman", 1), ("Qatar", 1), ("Yemen", 1),
]
CITING_COLLABORATIONS = [
    (("Japan", "India", "Brunei", "Indonesia", "Philippines", "Malaysia"), 5),
    (("Luxembourg", "Germany"), 3),
    (("United Kingdom", "Malaysia"), 3),
    (("United Kingdom", "United States"), 3),
    (("United States", "Germany"), 3),
    (("France", "United States"), 2),
    (("Malaysia", "Austria"), 2),
    (("Malaysia", "Japan"), 2),
    (("United Kingdom", "Netherlands"), 2),
    (("United States", "China"), 2),
    (("United States", "India"), 2),
    (("United States", "Israel"), 2),
    (("Argentina", "Canada"), 1),
    (("Australia", "Hong Kong"), 1),
    (("Belgium", "Korea", "China", "Thailand", "Malaysia", "Taiwan", "Switzerland"), 1),
    (("Bosnia", "Herzegovina"), 1),
    (("Brazil", "Portugal"), 1),
    (("Brazil", "Portugal", "Turkey"), 1),
    (("Canada", "Japan"), 1),
    (("Chile", "United States"), 1),
    (("China", "Germany"), 1),
    (("Denmark", "Netherlands", "United Kingdom"), 1),
    (("Egypt", "Belgium", "Italy", "Greece"), 1),
    (("Egypt", "Saudi Arabia"), 1),
    (("France", "Austria"), 1),
    (("France", "United Kingdom"), 1),
    (("Germany", "Austria"), 1),
    (("Germany", "Vietnam", "Gabon"), 1),
    (("Greece", "Egypt"), 1),
    (("Greece", "United States"), 1),
    (("India", "Nepal"), 1),
    (("India", "Pakistan"), 1),
    (("India", "United Kingdom"), 1),
    (("Iran", "Canada"), 1),
    (("Italy", "Germany"), 1),
    (("Italy", "United Kingdom", "Hungary", "Belgium"), 1),
    (("Malaysia", "Singapore"), 1),
    (("Malaysia", "Singapore", "Japan", "Indonesia", "Philippines", "India"), 1),
    (("Malaysia", "Korea"), 1),
    (("Netherlands", "Switzerland"), 1),
    (("Oman", "Malaysia"), 1),
    (("Peru", "United States"), 1),
    (("Poland", "Austria"), 1),
    (("Kuwait", "Pakistan"), 1),
    (("Spain", "Costa Rica"), 1),
    (("Sri Lanka", "Singapore"), 1),
    (("Sweden", "Iran", "Finland"), 1),
    (("Sweden", "Norway"), 1),
    (("Switzerland", "Singapore", "United States", "Laos"), 1),
    (("Tunisia", "Albania"), 1),
    (("UAE", "United Kingdom"), 1),
    (("United Kingdom", "Bangladesh"), 1),
    (("United Kingdom", "Canada"), 1),
    (("United Kingdom", "India", "United States"), 1),
    (("United Kingdom", "Iran"), 1),
    (("United Kingdom", "Japan"), 1),
    (("United Kingdom", "Qatar"), 1),
    (("United Kingdom", "Scotland"), 1),
    (("United Kingdom", "Sweden"), 1),
    (("United States", "Australia"), 1),
    (("United States", "Bangladesh"), 1),
    (("United States", "Belgium"), 1),
    (("United States", "Columbia"), 1),
    (("United States", "Iran"), 1),
    (("United States", "Italy"), 1),
    (("United States", "Qatar"), 1),
    (("United States", "Senegal"), 1),
    (("United States", "Spain"), 1),
    (("United States", "Thailand", "China", "France", "Australia", "Switzerland"), 1),
    (("Wales", "Hong Kong"), 1),
    (("Algeria", "Canada"), 1),
]

# most productive authors pinned to their affiliations (canonical names)
CORE_AFFILIATIONS = {
    "Ruszymah B.H.I.": "Universiti Kebangsaan Malaysia",
    "Aminuddin B.S.": "Universiti Kebangsaan Malaysia",
    "Gendeh, B.S.": "Universiti Kebangsaan Malaysia",
    "Chua, K.H.": "Universiti Kebangsaan Malaysia",
    "Philip, R": "Hospital Ipoh.Perak.",
    "Chua, K.B.": "Ministry of Health Malaysia",
    "Prepageran, N.": "University of Malaya",
    "Halim A.S.": "Universiti Sains Malaysia.",
    "Kwan, M.K.": "University of Malaya",
    "Sukumar, N.": "Universiti Kebangsaan Malaysia",
    "Sopyan I.": "International Islamic University of Malaysia",
    "Sherina M.S": "Universiti Putra Malaysia",
    "Abdullah J.M": "Universiti Sains Malaysia.",
    "Zulmi W.": "Universiti Sains Malaysia.",
    "Gurdeep, S.": "Hospital Ipoh.Perak.",
    "Raymond, A.A.": "Hospital Universiti Kebangsaan Malaysia",
    "Loh, K.Y.,": "International Medical University, Seremban",
    "Teng, C.L.": "International Medical University, Seremban",
    "Kumarasamy,V": "Ministry of Health Malaysia",
    "Tan, G.C.": "Universiti Kebangsaan Malaysia",
    "Rampal, L.": "Universiti Putra Malaysia",
    "Harvinder, S.": "Hospital Ipoh.Perak.",
    "Hamidon B.B.": "Hospital Universiti Kebangsaan Malaysia",
    "Sivalingam, N": "International Medical University, Seremban",
    "Chan, K.Y.": "Universiti Kebangsaan Malaysia",
    "Saim L": "Universiti Kebangsaan Malaysia",
    "Zulfiqar M.A": "Universiti Kebangsaan Malaysia",
    "Shashinder, S": "University of Malaya",
    "Gopala, K.G.": "University of Malaya",
    "Mallina, S": "Hospital Ipoh.Perak.",
    "Rosalind, S": "Hospital Ipoh.Perak.",
    "Leong, C.F.": "Hospital Universiti Kebangsaan Malaysia",
    "Teoh, C.M": "Hospital Universiti Kebangsaan Malaysia",
    "Yeap, J.S": "International Medical University, Seremban",
    "Loh, L.C.": "International Medical University, Seremban",
    "Norizah I": "Ministry of Health Malaysia",
    "Chan, S.C": "Royal College of Medicine Perak",
    "Khalid B.A.K": "Universiti Kebangsaan Malaysia",
    "Hamzaini A.H.": "Universiti Kebangsaan Malaysia",
    "Reddy, S.C": "Universiti Putra Malaysia",
    "Subha, S.T.": "Universiti Putra Malaysia",
    "Biswal, B.M.": "Universiti Sains Malaysia.",
    "Mafauzy M": "Universiti Sains Malaysia.",
    "Naing L": "Universiti Sains Malaysia.",
    "Faisham W.I": "Universiti Sains Malaysia.",
    "Kuljit, S": "University of Malaya",
    "Saw, A": "University of Malaya Medical Centre",
    "Choon, S.K.": "University of Malaya",
}

TITLE_VOCAB = (
    "clinical outcome of patients with chronic disease management in tertiary "
    "care hospitals a five year retrospective review comparing treatment and "
    "surgical approaches for early diagnosis among adult cohorts presenting "
    "severe complications during follow up screening programmes across "
    "community health settings"
).split()


def norm(text: str) -> str:
    return " ".join(text.split()).upper().rstrip(" .")


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        next(reader)
        return [row for row in reader if row]


class Author:
    __slots__ = ("name", "remaining", "affiliation", "country")

    def __init__(self, name, count):
        self.name = name
        self.remaining = count
        self.affiliation = None
        self.country = None


def load_pools():
    """Authors and affiliations with countries/types, fully assigned."""
    authors = [Author(nm, int(n)) for nm, n in read_csv(FIXTURES / "author_productivity.csv")]
    affiliations = [(nm, int(n), country, atype)
                    for nm, n, country, atype in read_csv(FIXTURES / "affiliations.csv")]
    assert len(authors) == 1435 and sum(a.remaining for a in authors) == 2177
    assert len(affiliations) == 173

    aff_info = {nm: (country, atype) for nm, _, country, atype in affiliations}
    malaysian = [(nm, n) for nm, n, country, _ in affiliations if country == "Malaysia"]
    foreign = [(nm, n, country) for nm, n, country, _ in affiliations if country != "Malaysia"]
    assert sum(n for _, n in malaysian) == 1255
    assert sum(n for _, n, _ in foreign) == 179

    heavy = [a for a in authors if a.remaining >= 5]
    assert len(heavy) == 48
    for author in heavy:
        target = CORE_AFFILIATIONS[author.name]
        author.affiliation = target
        author.country = "Malaysia"

    twos = [a for a in authors if a.remaining == 2 and a.affiliation is None]
    ones = [a for a in authors if a.remaining == 1 and a.affiliation is None]
    n_foreign_doubles = sum(FOREIGN_DOUBLES.values())
    foreign_doubles = twos[-n_foreign_doubles:]
    foreign_singles = ones[-(179 - n_foreign_doubles):]

    # deal the double-paper names to their planned countries
    double_stack = list(foreign_doubles)
    doubles_by_country = {}
    for country in sorted(FOREIGN_DOUBLES):
        take = FOREIGN_DOUBLES[country]
        doubles_by_country[country] = double_stack[:take]
        double_stack = double_stack[take:]
    assert not double_stack

    # fill foreign affiliation pools: doubles first, then singles
    single_stack = list(foreign_singles)
    by_country = {}
    for nm, n, country in foreign:
        by_country.setdefault(country, []).append((nm, n))
    for country in sorted(by_country):
        pool = doubles_by_country.get(country, [])[:]
        need = sum(n for _, n in by_country[country])
        while len(pool) < need:
            pool.append(single_stack.pop(0))
        idx = 0
        for nm, n in by_country[country]:
            for _ in range(n):
                pool[idx].affiliation = nm
                pool[idx].country = country
                idx += 1
        assert idx == need
    assert not single_stack, f"{len(single_stack)} foreign names unassigned"

    # one anonymous-affiliation author, then fill Malaysian pools
    unassigned = [a for a in authors if a.affiliation is None]
    anon = unassigned[-1]
    anon.affiliation = "Anonymous"
    anon.country = "Malaysia"
    unassigned = unassigned[:-1]

    heavy_load = Counter(a.affiliation for a in heavy)
    slots = []
    for nm, n in malaysian:
        free = n - heavy_load.get(nm, 0)
        assert free >= 0, f"affiliation {nm} over-pinned"
        slots.append([nm, free])
    assert sum(free for _, free in slots) == len(unassigned)
    # largest remaining pool first keeps multi-paper authors spread wide
    for author in unassigned:
        slots.sort(key=lambda s: (-s[1], s[0]))
        slot = slots[0]
        assert slot[1] > 0
        author.affiliation = slot[0]
        author.country = "Malaysia"
        slot[1] -= 1

    assert all(a.affiliation is not None for a in authors)
    return authors, aff_info


class Scheduler:
    """Deterministic assignment of author names to article slots."""

    def __init__(self, authors, aff_info):
        self.authors = authors
        self.aff_info = aff_info
        self.by_affiliation = {}
        self.by_country = {}
        for author in authors:
            self.by_affiliation.setdefault(author.affiliation, []).append(author)
            self.by_country.setdefault(author.country, []).append(author)

    @staticmethod
    def _pick(pool, k, exclude=()):
        live = [a for a in pool if a.remaining > 0 and a not in exclude]
        live.sort(key=lambda a: (-a.remaining, a.name))
        return live[:k]

    def take_same_affiliation(self, k, country="Malaysia"):
        """k authors sharing one affiliation of the given country.

        Best fit: the smallest pool that can still host k distinct authors,
        preserving large pools for larger articles later in the plan.
        """
        best = None
        for affiliation in sorted({a.affiliation for a in self.by_country[country]}):
            pool = [a for a in self.by_affiliation[affiliation]
                    if a.remaining > 0 and a.country == country]
            if len(pool) < k:
                continue
            capacity = sum(a.remaining for a in pool)
            if best is None or capacity < best[0]:
                best = (capacity, affiliation, pool)
        assert best is not None, f"no affiliation in {country} can host {k} authors"
        chosen = self._pick(best[2], k)
        for a in chosen:
            a.remaining -= 1
        return chosen

    def take_diff_affiliation(self, k, country="Malaysia"):
        """k authors from >= 2 affiliations within one country."""
        if country == "Malaysia":
            chosen = self._pick(self.by_country[country], k)
        else:
            # drain scattered small pools first so same-affiliation articles
            # elsewhere in the plan keep their concentrated supply
            live = [a for a in self.by_country[country] if a.remaining > 0]
            pool_size = Counter(a.affiliation for a in live)
            live.sort(key=lambda a: (pool_size[a.affiliation], -a.remaining, a.name))
            chosen = live[:k]
        assert len(chosen) == k, f"{country} cannot supply {k} authors"
        if len({a.affiliation for a in chosen}) < 2:
            alt = next(
                (a for a in sorted(self.by_country[country], key=lambda a: (-a.remaining, a.name))
                 if a.remaining > 0 and a.affiliation != chosen[0].affiliation and a not in chosen),
                None,
            )
            assert alt is not None, f"{country} has a single live affiliation"
            chosen[-1] = alt
        for a in chosen:
            a.remaining -= 1
        return chosen

    def take_any(self, k, country="Malaysia", exclude=()):
        if country == "Malaysia":
            chosen = self._pick(self.by_country[country], k, exclude=exclude)
        else:
            live = [a for a in self.by_country[country]
                    if a.remaining > 0 and a not in exclude]
            pool_size = Counter(a.affiliation for a in live)
            live.sort(key=lambda a: (-a.remaining, pool_size[a.affiliation], a.name))
            chosen = live[:k]
        assert len(chosen) == k, f"{country} cannot supply {k} more authors"
        for a in chosen:
            a.remaining -= 1
        return chosen


def plan_articles(scheduler):
    """Per-year article plans: ordered (authors, class) assignments.

    Foreign pools are small, so their single-country articles are filled
    country-globally (all same-affiliation articles first, then
    multi-affiliation ones, then loose slots); the Malaysian pool is deep
    and fills year by year.
    """
    articles_by_year = {y: [] for y in YEARS}
    mixed_by_year = {y: [m for m in MIXED_PLAN if m[0] == y] for y in YEARS}
    foreign_by_year = {y: [f for f in FOREIGN_PLAN if f[0] == y] for y in YEARS}

    for year in YEARS:
        singles, same, diff, _ = CLASS_COUNTS[year]
        sizes = Counter(SIZE_HIST[year])

        plan = []  # (kind, payload)
        foreign_single = 0
        foreign_same = foreign_diff = 0
        for _, countries, layout in foreign_by_year[year]:
            size = sum(countries.values())
            sizes[size] -= 1
            if size == 1:
                foreign_single += 1
            elif layout == "same":
                foreign_same += 1
            elif layout == "diff":
                foreign_diff += 1
            plan.append(("foreign", (countries, layout)))
        for _, countries, home_n in mixed_by_year[year]:
            size = sum(countries.values()) + home_n
            sizes[size] -= 1
            plan.append(("mixed", (countries, home_n)))

        pm_singles = singles - foreign_single
        pm_same = same - foreign_same
        pm_diff = diff - foreign_diff
        for _ in range(pm_singles):
            sizes[1] -= 1
        assert all(v >= 0 for v in sizes.values()), (year, sizes)
        multi_sizes = sorted(sizes.elements())
        assert len(multi_sizes) == pm_same + pm_diff
        same_sizes = multi_sizes[:pm_same]          # smallest sizes stay in-house
        diff_sizes = multi_sizes[pm_same:]

        ordered = []
        ordered += [("pm_same", k) for k in sorted(same_sizes, reverse=True)]
        ordered += [item for item in plan if item[0] == "foreign"]
        ordered += [("pm_diff", k) for k in sorted(diff_sizes, reverse=True)]
        ordered += [(kind, payload) for kind, payload in plan if kind == "mixed"]
        ordered += [("pm_single", 1)] * pm_singles
        articles_by_year[year] = ordered

    # phase 1: all foreign takes, country-global, sames before diffs
    foreign_fills: dict[tuple[int, int], list] = {}

    def foreign_takes():
        for year in YEARS:
            for seq, (kind, payload) in enumerate(articles_by_year[year]):
                if kind == "foreign":
                    countries, layout = payload
                    if len(countries) == 1:
                        (country, k), = countries.items()
                        yield (year, seq, country, k, layout if k > 1 else "any", None)
                    else:
                        for country in sorted(countries):
                            yield (year, seq, country, countries[country], "any", None)
                elif kind == "mixed":
                    countries, _ = payload
                    for country in sorted(countries):
                        yield (year, seq, country, countries[country], "any", None)

    rank = {"same": 0, "diff": 1, "any": 2}
    for year, seq, country, k, layout, _ in sorted(
        foreign_takes(), key=lambda t: (rank[t[4]], -t[3], t[0], t[1])
    ):
        key = (year, seq)
        existing = foreign_fills.setdefault(key, [])
        if layout == "same":
            taken = scheduler.take_same_affiliation(k, country=country)
        elif layout == "diff":
            taken = scheduler.take_diff_affiliation(k, country=country)
        else:
            taken = scheduler.take_any(k, country=country, exclude=existing)
        existing.extend(taken)

    # phase 2: Malaysian takes, year by year in plan order
    results = {y: [] for y in YEARS}
    for year in YEARS:
        for seq, (kind, payload) in enumerate(articles_by_year[year]):
            if kind == "pm_same":
                authors = scheduler.take_same_affiliation(payload)
            elif kind == "pm_diff":
                authors = scheduler.take_diff_affiliation(payload)
            elif kind == "pm_single":
                authors = scheduler.take_any(1)
            elif kind == "foreign":
                authors = foreign_fills[(year, seq)]
            else:  # mixed
                _, home_n = payload
                authors = foreign_fills[(year, seq)]
                authors = authors + scheduler.take_any(home_n, exclude=authors)
            results[year].append(authors)
    assert all(a.remaining == 0 for a in scheduler.authors), [
        (a.name, a.remaining) for a in scheduler.authors if a.remaining][:5]
    return results


def make_titles():
    word_counts = []
    for words, n in sorted(TITLE_WORDS.items()):
        word_counts += [words] * n
    assert len(word_counts) == 580
    titles = []
    for i, w in enumerate(word_counts):
        words = [TITLE_VOCAB[(i * 7 + j) % len(TITLE_VOCAB)] for j in range(w)]
        titles.append(" ".join(words).capitalize())
    return titles


def make_keyword_lists(n_with_keywords):
    rows = [(k, int(n)) for k, n in read_csv(FIXTURES / "keyword_frequencies.csv")]
    assert sum(n for _, n in rows) == 1936
    counts = []
    for k, n in sorted(KEYWORDS_PER_ARTICLE.items(), reverse=True):
        if k:
            counts += [k] * n
    assert len(counts) == n_with_keywords and sum(counts) == 1936
    remaining = {k: n for k, n in rows}
    lists = []
    for k in counts:
        top = sorted(remaining, key=lambda kw: (-remaining[kw], kw))[:k]
        assert len(top) == k, "keyword supply exhausted"
        for kw in top:
            remaining[kw] -= 1
            if not remaining[kw]:
                del remaining[kw]
        lists.append(top)
    assert not remaining, f"{len(remaining)} keywords undealt"
    return lists


def make_ref_counts():
    """Per-year per-article reference counts hitting bucket and total targets."""
    rep_bucket = {rep: (lo, hi) for (lo, hi), rep in
                  zip(REF_BUCKETS, (5, 15, 25, 35, 45, 55, 65, 75, 85))}
    out = {}
    for year in YEARS:
        counts = []
        for rep, n in sorted(REF_BUCKET_PLAN[year].items(), reverse=True):
            counts += [rep] * n
        assert len(counts) == ARTICLES[year], (year, len(counts))
        target = REFS_PER_YEAR[year]
        diff = target - sum(counts)
        step = 1 if diff > 0 else -1
        i = 0
        guard = 0
        while diff:
            lo, hi = rep_bucket[next(rep for rep in rep_bucket
                                     if rep_bucket[rep][0] <= counts[i] <= rep_bucket[rep][1])]
            if lo <= counts[i] + step <= hi:
                counts[i] += step
                diff -= step
            i = (i + 1) % len(counts)
            guard += 1
            assert guard < 100000, f"cannot tune {year}"
        assert sum(counts) == target
        out[year] = counts
    return out


def make_reference_streams():
    """Per citing-year streams of source types, publication years, titles."""
    types = {}
    for year in YEARS:
        stream = []
        for fmt in ("journal", "book", "conference", "web", "government",
                    "international_org", "thesis", "newspaper", "other"):
            stream += [fmt] * REF_FORMATS[fmt][year]
        assert len(stream) == REFS_PER_YEAR[year]
        types[year] = stream

    pub_years = {}
    columns = dict(zip((2008, 2007, 2006, 2005, 2004), range(1, 6)))
    for year in YEARS:
        col = columns[year]
        stream = []
        old_i = 0
        for row in PUB_YEAR_MATRIX:
            label, n = row[0], row[col]
            for _ in range(n):
                if label == "undated":
                    stream.append(None)
                elif label == "old":
                    stream.append(OLD_PUB_YEARS[old_i % len(OLD_PUB_YEARS)])
                    old_i += 1
                else:
                    stream.append(label)
        assert len(stream) == REFS_PER_YEAR[year], (year, len(stream))
        pub_years[year] = stream

    rows = [(t, int(n)) for t, n in read_csv(FIXTURES / "journal_citations.csv")]
    assert sum(n for _, n in rows) == 5927
    titles = []
    for t, n in rows:
        titles += [t] * n
    return types, pub_years, titles


def build():
    authors, aff_info = load_pools()
    scheduler = Scheduler(authors, aff_info)
    author_lists = plan_articles(scheduler)

    titles = make_titles()
    ref_counts = make_ref_counts()
    types_stream, pub_stream, title_stream = make_reference_streams()
    title_i = 0

    # received-citation streams, global deal order: pub year then citing year
    doc_stream = []
    for doc, n in CITING_DOC_TYPES:
        doc_stream += [doc] * n
    country_stream = [[]] * NO_COUNTRY_CITATIONS
    for country, n in CITING_COUNTRIES:
        country_stream = country_stream + [[country]] * n
    for combo, n in CITING_COLLABORATIONS:
        country_stream = country_stream + [list(combo)] * n
    assert len(country_stream) == len(doc_stream) == 1164
    source_stream = []
    for src, n in CITING_SOURCES:
        source_stream += [src] * n

    articles = []
    flat_index = 0
    kw_article_flags = []
    for year in YEARS:
        lists = author_lists[year]
        n = ARTICLES[year]
        assert len(lists) == n
        n_editorial = EDITORIALS[year]
        n_original = ORIGINALS[year]
        # editorials take the final single-author slots; originals lead
        type_by_index = {}
        for i in range(n - n_editorial, n):
            type_by_index[i] = "editorial"
        for i in range(n_original):
            type_by_index[i] = "original"
        other_i = 0
        for i in range(n):
            if i not in type_by_index:
                type_by_index[i] = OTHER_TYPES[other_i % len(OTHER_TYPES)]
                other_i += 1
        assert sum(1 for t in type_by_index.values() if t == "original") == n_original

        # funders: first funded_n originals of the year
        funder_stream = []
        for name, per_year in FUNDERS:
            funder_stream += [name] * per_year.get(year, 0)

        # self-citations ride on the articles with the most references
        self_refs = [0] * n
        k = SELF_CITING_ARTICLES[year]
        for j in range(SELF_CITATIONS[year]):
            self_refs[j % k] += 1

        # received citations: first `cited_n` articles of the year
        cited_n, by_year = RECEIVED[year]
        received_lists = [[] for _ in range(n)]
        j = 0
        for citing_year in sorted(by_year):
            for _ in range(by_year[citing_year]):
                received_lists[j % cited_n].append(citing_year)
                j += 1

        # deal source types column-major so every article mixes formats
        counts = ref_counts[year]
        order = sorted(((slot, idx) for idx, c in enumerate(counts) for slot in range(c)))
        type_by_ref = {}
        for stream_pos, (slot, idx) in enumerate(order):
            type_by_ref[(idx, slot)] = types_stream[year][stream_pos]
        pub_iter = iter(pub_stream[year])

        for idx in range(n):
            article_authors = lists[idx]
            atype = type_by_index[idx]
            keywords_flag = atype != "editorial"
            kw_article_flags.append(keywords_flag)

            refs = []
            self_left = self_refs[idx]
            for slot in range(counts[idx]):
                source_type = type_by_ref[(idx, slot)]
                pub_year = next(pub_iter)
                ref = {"source_type": source_type, "pub_year": pub_year}
                if source_type == "journal":
                    if self_left:
                        ref["journal_title"] = JOURNAL
                        self_left -= 1
                    else:
                        title = title_stream[title_i]
                        title_i += 1
                        ref["journal_title"] = title
                        lang = LANGUAGES_BY_TITLE.get(title)
                        if lang:
                            ref["language"] = lang
                refs.append(ref)
            assert self_left == 0, (year, idx, self_left)

            received = []
            for citing_year in received_lists[idx]:
                doc = doc_stream[flat_index + len(received) - len(received)]  # placeholder
                received.append({"citing_year": citing_year})
            articles.append({
                "id": f"MJM-{year}-{idx + 1:03d}",
                "year": year,
                "title": None,  # filled below
                "type": atype,
                "keywords": [],
                "authors": [
                    {"name": a.name, "affiliation": a.affiliation,
                     "affiliation_type": ("unknown" if a.affiliation == "Anonymous"
                                           else aff_info[a.affiliation][1]),
                     "country": a.country}
                    for a in article_authors
                ],
                "references": refs,
                "received": received,
                "funders": [],
            })
            flat_index += 1

        # funders onto the first funded originals
        fi = 0
        for idx in range(n):
            if fi >= len(funder_stream):
                break
            if type_by_index[idx] == "original":
                articles[len(articles) - n + idx]["funders"] = [funder_stream[fi]]
                fi += 1
        assert fi == len(funder_stream)

    assert title_i == 5927

    # titles and keywords across the whole corpus
    all_titles = make_titles()
    for article, title in zip(articles, all_titles):
        article["title"] = title
    kw_lists = make_keyword_lists(sum(kw_article_flags))
    kw_iter = iter(kw_lists)
    for article, flag in zip(articles, kw_article_flags):
        article["keywords"] = next(kw_iter) if flag else []

    # received-citation details in global order
    pos = 0
    for article in articles:
        detailed = []
        for entry in article["received"]:
            doc = doc_stream[pos]
            countries = country_stream[pos]
            rec = {
                "citing_year": entry["citing_year"],
                "doc_type": doc,
                "citing_countries": countries,
                "is_self": False,
            }
            if doc == "journal_article":
                rec["_journal_slot"] = True
            detailed.append(rec)
            pos += 1
        article["received"] = detailed
    assert pos == 1164

    # citing sources onto the first journal-article citations
    si = 0
    for article in articles:
        for rec in article["received"]:
            if rec.pop("_journal_slot", False) and si < len(source_stream):
                rec["citing_source"] = source_stream[si]
                rec["is_self"] = norm(source_stream[si]) == norm(JOURNAL)
                si += 1
    assert si == len(source_stream)

    return {
        "journal": JOURNAL,
        "year_start": YEARS[0],
        "year_end": YEARS[-1],
        "articles": articles,
    }


def verify(data):
    """Recompute every target marginal straight from the JSON payload."""
    articles = data["articles"]
    assert len(articles) == 580
    per_year = Counter(a["year"] for a in articles)
    assert dict(per_year) == ARTICLES
    auths = Counter()
    foreign = Counter()
    for a in articles:
        auths[a["year"]] += len(a["authors"])
        foreign[a["year"]] += sum(1 for au in a["authors"] if au["country"] != "Malaysia")
    assert dict(auths) == AUTHORSHIPS, dict(auths)
    assert dict(foreign) == FOREIGN_AUTHORSHIPS, dict(foreign)

    names = Counter()
    for a in articles:
        seen = set()
        for au in a["authors"]:
            key = norm(au["name"])
            assert key not in seen, (a["id"], key)
            seen.add(key)
            names[key] += 1
    assert len(names) == 1435 and sum(names.values()) == 2177

    refs = Counter()
    selfs = Counter()
    for a in articles:
        refs[a["year"]] += len(a["references"])
        for r in a["references"]:
            if r["source_type"] == "journal" and norm(r["journal_title"]) == norm(JOURNAL):
                selfs[a["year"]] += 1
    assert dict(refs) == REFS_PER_YEAR
    assert dict(selfs) == SELF_CITATIONS

    received = sum(len(a["received"]) for a in articles)
    assert received == 1164
    langs = Counter()
    for a in articles:
        for r in a["references"]:
            langs[r.get("language", "English")] += 1
    assert sum(v for k, v in langs.items() if k != "English") == 25

    kw_total = sum(len(a["keywords"]) for a in articles)
    assert kw_total == 1936
    words = Counter(len(a["title"].split()) for a in articles)
    assert dict(words) == TITLE_WORDS

    funded = Counter()
    originals = Counter()
    for a in articles:
        if a["type"] == "original":
            originals[a["year"]] += 1
            if a["funders"]:
                funded[a["year"]] += 1
    assert dict(originals) == ORIGINALS
    assert sum(funded.values()) == 61


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(FIXTURES / "mjm_2004_2008.json"))
    args = parser.parse_args()
    data = build()
    verify(data)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(data, fh, ensure_ascii=False, indent=1)
        fh.write("\n")
    print(f"wrote {out}: {len(data['articles'])} articles")


if __name__ == "__main__":
    main()
