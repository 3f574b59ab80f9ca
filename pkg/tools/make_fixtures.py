#!/usr/bin/env python3
"""Build the desk-scale fixtures: two synthetic corpora, the mini lexicon,
pre-recorded decision logs, review plans and pipeline configs.

Every aggregate the test suite relies on (per-category word counts, token
placements, attestation windows, breakdown counts, review queue sizes) is
engineered here and re-verified through the package's public APIs before
anything is written. Deterministic: rerunning produces identical bytes.
"""

import json
import os
import random
import sys

from neologia import analytics, classify, sampling
from neologia.corpus import parse_corpus, running_words, tokenize
from neologia.lexicon import load_lexicon
from neologia.normalize import Normalizer

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")

RNG_SEED = 20210215

# ---------------------------------------------------------------------------
# lexicon: 42 seventeenth-century types + 21 eighteenth-century types
# fields: lemma, pos, etym kind, source, attestation year (sense 1),
#         ht path, extra senses [(year, gloss, ht_path)], extra variants
# ---------------------------------------------------------------------------

E17 = [
    ("acrimonious", "adjective", "borrowing", "Latin", 1615, ["the world", "matter"], [], []),
    ("believingly", "adverb", "derivation", None, 1650, ["the mind", "belief"], [], []),
    ("candid", "adjective", "borrowing", "Latin", 1613, ["the world", "matter"], [], []),
    ("candour", "noun", "borrowing", "Latin", 1620, ["the mind", "emotion"], [], ["candoure"]),
    ("causally", "adverb", "derivation", None, 1610, ["the mind", "mental capacity"], [], []),
    ("compensate", "verb", "borrowing", "Latin", 1610, ["the world", "action"], [], []),
    ("compliance", "noun", "borrowing", "Latin", 1603, ["society", "behaviour"], [], []),
    ("condescension", "noun", "borrowing", "Latin", 1647, ["society", "behaviour"], [], ["condiscension"]),
    ("coney-ground", "noun", "compounding", None, 1608, ["the world", "animals"], [], []),
    ("congregational", "adjective", "derivation", None, 1639, ["society", "faith"], [], []),
    ("covenanting", "adjective", "derivation", None, 1645, ["society", "faith"],
     [(1650, "entering into covenants", ["society", "faith"])], []),
    ("crawling", "noun", "derivation", None, 1655, ["the world", "movement"], [], []),
    ("dishearten", "verb", "derivation", None, 1620, ["the mind", "emotion"], [], []),
    ("dragooner", "noun", "borrowing", "French", 1640, ["society", "armed hostility"], [], []),
    ("efficaciously", "adverb", "derivation", None, 1644, ["the world", "action"], [], []),
    ("eminently", "adverb", "derivation", None, 1605, ["the mind", "mental capacity"], [], []),
    ("endeared", "adjective", "derivation", None, 1622, ["the mind", "emotion"], [], []),
    ("entanglement", "noun", "derivation", None, 1632, ["the world", "matter"], [], []),
    ("helpfulness", "noun", "derivation", None, 1647, ["the world", "action"], [], []),
    ("hint", "verb", "derivation", None, 1658, ["the mind", "language"], [], []),
    ("idolum", "noun", "borrowing", "Latin", 1647, ["the mind", "mental capacity"], [], []),
    ("incendiary", "noun", "derivation", None, 1606, ["society", "authority"], [], []),
    ("incognito", "adjective", "borrowing", "Italian", 1644, ["society", "social relations"], [], []),
    ("initiatory", "adjective", "derivation", None, 1612, ["the mind", "mental capacity"], [], []),
    ("joke", "noun", "unknown", None, 1670, ["society", "leisure"], [], []),
    ("landgravine", "noun", "borrowing", "German", 1682, ["society", "authority"], [], []),
    ("malignancy", "noun", "borrowing", "Latin", 1646, ["society", "authority"], [], ["malignancie"]),
    ("manifesto", "noun", "borrowing", "Italian", 1615, ["society", "authority"], [], []),
    ("oversweetness", "noun", "derivation", None, 1656, ["the world", "food and drink"], [], []),
    ("packet-boat", "noun", "compounding", None, 1642, ["society", "travel"], [], []),
    ("plenipotentiary", "noun", "borrowing", "Latin", 1645, ["society", "authority"], [], []),
    ("remind", "verb", "derivation", None, 1640, ["the mind", "memory"], [], []),
    ("rickets", "noun", "unknown", None, 1610, ["the world", "health and disease"], [], []),
    ("sequestrator", "noun", "borrowing", "Latin", 1643, ["society", "law"], [], []),
    ("servient", "noun", "borrowing", "Latin", 1630, ["the world", "existence"], [], []),
    ("statement", "noun", "derivation", None, 1750, ["the mind", "language"],
     [(1775, "written account", ["the mind", "language"])], []),
    ("swede", "noun", "borrowing", "German", 1614, ["society", "nations"], [], []),
    ("tea", "noun", "borrowing", "French", 1655, ["the world", "food and drink"],
     [(1663, "the tea plant", ["the world", "food and drink"])], ["thea"]),
    ("variously", "adverb", "derivation", None, 1620, ["the world", "existence"], [], []),
    ("vibrate", "verb", "borrowing", "Latin", 1616, ["the world", "movement"], [], []),
    ("visit", "noun", "conversion", None, 1621, ["society", "social relations"],
     [(1662, "professional call", ["society", "social relations"])], []),
    ("voluminous", "adjective", "borrowing", "Latin", 1605, ["the world", "space"], [], []),
]

E18 = [
    ("anecdote-monger", "noun", "compounding", None, 1772, ["society", "leisure"], [], []),
    ("blacky", "noun", "derivation", None, 1758, ["the world", "humankind"], [], []),
    ("cream-can", "noun", "compounding", None, 1755, ["the world", "food and drink"], [], []),
    ("dénouement", "noun", "borrowing", "French", 1752, ["society", "leisure"], [], []),
    ("floreat", "noun", "conversion", None, 1760, ["the mind", "language"], [], []),
    ("foundling-house", "noun", "compounding", None, 1747, ["society", "inhabiting"], [], ["fondlen"]),
    ("funny", "adjective", "derivation", None, 1756, ["the mind", "language"], [], []),
    ("hookah", "noun", "borrowing", "Arabic", 1763, ["the world", "matter"], [], []),
    ("inspectress", "noun", "derivation", None, 1771, ["society", "occupation"], [], []),
    ("interference", "noun", "derivation", None, 1783, ["society", "behaviour"], [], []),
    ("jumpable", "adjective", "derivation", None, 1760, ["the world", "movement"], [], []),
    ("lovee", "noun", "derivation", None, 1756, ["the mind", "emotion"], [], []),
    ("lumber-room", "noun", "compounding", None, 1740, ["the world", "space"], [], []),
    ("merry-Andrew-like", "adverb", "derivation", None, 1779, ["society", "leisure"], [], []),
    ("miliary-fever", "noun", "derivation", None, 1750, ["the world", "health and disease"], [], []),
    ("moonery", "noun", "derivation", None, 1762, ["the mind", "emotion"], [], []),
    ("mooning", "noun", "conversion", None, 1786, ["the mind", "attention"], [], []),
    ("namby-pamby", "adjective", "derivation", None, 1745, ["the world", "humankind"], [], []),
    ("puddingless", "adjective", "derivation", None, 1770, ["the world", "food and drink"], [], []),
    ("sentimental", "adjective", "derivation", None, 1749, ["the mind", "emotion"], [], []),
    ("tittup", "verb", "unknown", None, 1755, ["the world", "movement"], [], []),
]

# planted forms never listed as variants; these must resolve through the
# rule/edit stages instead of an exact hit
UNLISTED_FORMS = {
    "malignencye", "condisention", "believinglie", "eminentlie",
    "variouslie", "variousli",
}

# ---------------------------------------------------------------------------
# writers, recipients, letters
# persons: id -> (name, gender, rank, birth_year)
# ---------------------------------------------------------------------------

PERSONS17 = {
    "charles": ("Charles Rex", "male", "royalty", 1592),
    "eliz": ("Elizabeth Stuart", "female", "royalty", 1596),
    "harrison": ("Thomas Harrison", "male", "professionals", 1616),
    "dixwell": ("John Dixwell", "male", "professionals", None),
    "conway": ("Anne Conway", "female", "nobility", 1631),
    "thoward": ("Thomas Howard", "male", "nobility", 1585),
    "whoward": ("William Howard", "male", "nobility", 1614),
    "harley": ("Brilliana Harley", "female", "gentry", 1590),
    "lestrange": ("Hamon L'Estrange", "male", "gentry", 1583),
    "percival": ("Anthony Percival", "male", "gentry", None),
    "oxinden": ("Henry Oxinden", "male", "gentry", 1608),
    "cary": ("Anne Cary", "female", "clergy", None),
    "thimelby": ("Winefrid Thimelby", "female", "clergy", None),
    "baillie": ("Robert Baillie", "male", "clergy", None),
    "symmons": ("Edward Symmons", "male", "clergy", 1596),
    # recipients only
    "legge": ("William Legge", "male", "unknown", None),
    "roe": ("Thomas Roe", "male", "unknown", None),
    "jones": ("John Jones", "male", "unknown", None),
    "more": ("Henry More", "male", "unknown", None),
    "pennington": ("John Pennington", "male", "unknown", None),
    "aletheia": ("Aletheia Howard", "female", "unknown", None),
    "edharley": ("Edward Harley", "male", "unknown", None),
    "browne": ("Thomas Browne", "male", "unknown", None),
    "master": ("James Master", "male", "unknown", None),
    "barrow": ("Thomas Barrow", "male", "unknown", None),
    "ward": ("Mary Ward", "female", "unknown", None),
    "aston": ("Gertrude Aston", "female", "unknown", None),
    "dickson": ("David Dickson", "male", "unknown", None),
    "temple": ("John Temple", "male", "unknown", None),
    "vines": ("Richard Vines", "male", "unknown", None),
    "janes": ("Jane Symmons", "female", "unknown", None),
}

# (letter id, sender, recipient, year, relationship, words, text?, plants)
# plants: (surface, lemma) -- folded surface is the candidate form
LETTERS17 = [
    ("ARUNDE_068", "thoward", "pennington", 1641, "other_acquaintances", 190, False,
     [("Packette-Boate", "packet-boat"), ("voluminos", "voluminous")]),
    ("ELIZAB_031", "eliz", "roe", 1641, "close_friends", 540, False,
     [("visitt", "visit"), ("incognito", "incognito")]),
    ("ARUNDE_072", "whoward", "thoward", 1642, "nuclear_family", 150, False,
     [("statement", "statement")]),
    ("CHARLS_012", "charles", "legge", 1642, "other_acquaintances", 180, True,
     [("dragoner", "dragooner"), ("dishartned", "dishearten")]),
    ("ELIZAB_038", "eliz", "roe", 1642, "close_friends", 540, False,
     [("landgravin", "landgravine"), ("servient", "servient")]),
    ("ELIZAB_044", "eliz", "roe", 1642, "close_friends", 540, False,
     [("plenipotentiarie", "plenipotentiary")]),
    ("HARLEY_022", "harley", "edharley", 1642, "nuclear_family", 260, False,
     [("incendiaries", "incendiary"), ("reminde", "remind")]),
    ("ARUNDE_074", "whoward", "aletheia", 1643, "nuclear_family", 170, True,
     [("tee", "tea"), ("joak", "joke")]),
    ("BAILLI_029", "baillie", "dickson", 1643, "other_acquaintances", 240, False,
     [("covenanting", "covenanting"), ("congregationall", "congregational"),
      ("efficaciouslie", "efficaciously")]),
    ("ELIZAB_052", "eliz", "roe", 1643, "close_friends", 540, False,
     [("visite", "visit"), ("Swedes", "swede")]),
    ("ELIZAB_059", "eliz", "roe", 1643, "close_friends", 540, False, []),
    ("OXINDE_186", "percival", "oxinden", 1643, "other_acquaintances", 200, True,
     [("Malignencye", "malignancy"), ("causallie", "causally")]),
    ("OXINDE_201", "oxinden", "master", 1643, "other_acquaintances", 300, False,
     [("coney-grounde", "coney-ground"), ("ricketts", "rickets"),
      ("compensate", "compensate"), ("complyance", "compliance"),
      ("eminentlie", "eminently")]),
    ("CARY_006", "cary", "ward", 1645, "close_friends", 140, False,
     [("helpfulnes", "helpfulness")]),
    ("CHARLS_019", "charles", "legge", 1645, "other_acquaintances", 140, False,
     [("disharten", "dishearten")]),
    ("OXINDE_214", "oxinden", "barrow", 1645, "close_friends", 180, False,
     [("initiatorie", "initiatory")]),
    ("OXINDE_260", "oxinden", "master", 1645, "other_acquaintances", 130, False,
     [("compliaunce", "compliance")]),
    ("SYMMON_015", "symmons", "vines", 1646, "other_acquaintances", 220, False,
     [("covenantinge", "covenanting"), ("congregacionall", "congregational"),
      ("efficatiouslie", "efficaciously")]),
    ("DIXWEL_003", "dixwell", "temple", 1650, "other_acquaintances", 150, False,
     [("sequestrator", "sequestrator")]),
    ("HARLEY_035", "harley", "edharley", 1650, "nuclear_family", 150, False,
     [("eminentlye", "eminently")]),
    ("SYMMON_021", "symmons", "janes", 1650, "nuclear_family", 190, False,
     [("helpefulnesse", "helpfulness"), ("candyd", "candid"), ("remynde", "remind")]),
    ("THIMEL_011", "thimelby", "aston", 1650, "nuclear_family", 160, False,
     [("candide", "candid")]),
    ("CONWAY_093", "conway", "more", 1651, "close_friends", 320, True,
     [("eidolum", "idolum")]),
    ("CONWAY_097", "conway", "more", 1652, "close_friends", 280, False,
     [("vibrate", "vibrate"), ("intanglement", "entanglement")]),
    ("THIMEL_017", "thimelby", "aston", 1652, "nuclear_family", 130, False,
     [("coney-groundes", "coney-ground")]),
    ("LESTRA_007", "lestrange", "browne", 1653, "other_acquaintances", 420, False,
     [("acrimonious", "acrimonious"), ("oversweetnes", "oversweetness"),
      ("manifesto", "manifesto"), ("crawlinge", "crawling"), ("candor", "candour")]),
    ("LESTRA_012", "lestrange", "browne", 1653, "other_acquaintances", 150, False,
     [("rickettes", "rickets")]),
    ("CONWAY_104", "conway", "more", 1654, "close_friends", 140, False,
     [("initiatorye", "initiatory")]),
    ("DIXWEL_009", "dixwell", "temple", 1654, "other_acquaintances", 160, False,
     [("sequestratour", "sequestrator")]),
    ("DIXWEL_014", "dixwell", "temple", 1655, "other_acquaintances", 120, False,
     [("compensatt", "compensate")]),
    ("BAILLI_041", "baillie", "dickson", 1656, "other_acquaintances", 140, False,
     [("candyde", "candid")]),
    ("CARY_019", "cary", "ward", 1656, "close_friends", 150, False,
     [("manifestoe", "manifesto")]),
    ("JONES_040", "harrison", "jones", 1656, "close_friends", 625, False,
     [("believinglie", "believingly"), ("condisention", "condescension"),
      ("endeered", "endeared")]),
    ("JONES_042", "harrison", "jones", 1656, "close_friends", 625, False,
     [("hinte", "hint"), ("variouslie", "variously")]),
    ("JONES_047", "harrison", "jones", 1657, "close_friends", 625, False,
     [("hynt", "hint"), ("variousli", "variously")]),
    ("JONES_049", "harrison", "jones", 1657, "close_friends", 625, False, []),
    ("LESTRA_018", "lestrange", "browne", 1657, "other_acquaintances", 150, False,
     [("acrimoniouse", "acrimonious")]),
    ("PERCIV_008", "percival", "oxinden", 1650, "other_acquaintances", 130, False,
     [("voluminousse", "voluminous")]),
]

PERSONS18 = {
    "sancho": ("Ignatius Sancho", "male", "other_non_gentry", 1729),
    "barnes": ("Henry Barnes", "male", "other_non_gentry", None),
    "twining": ("Thomas Twining", "male", "clergy", 1735),
    "colton": ("Mary Colton", "female", "clergy", 1720),
    "burney": ("Frances Burney", "female", "professionals", 1752),
    "boddam": ("Mary Rawson Hart Boddam", "female", "professionals", 1744),
    "draper": ("Eliza Draper", "female", "professionals", 1743),
    "thrale": ("Hester Lynch Thrale", "female", "gentry", 1741),
    "lennox": ("Sarah Lennox", "female", "gentry", 1745),
    "filmer": ("Edward Filmer", "male", "gentry", 1740),
    "newdigate": ("Roger Newdigate", "male", "nobility", 1719),
    "walpole": ("Horace Walpole", "male", "nobility", 1717),
    # recipients only
    "stevenson": ("William Stevenson", "male", "unknown", None),
    "leicester": ("Elizabeth Leicester", "female", "unknown", None),
    "danielt": ("Daniel Twining", "male", "unknown", None),
    "white": ("Samuel White", "male", "unknown", None),
    "crisp": ("Samuel Crisp", "male", "unknown", None),
    "pickering": ("Thomas Pickering", "male", "unknown", None),
    "obrien": ("Susan O'Brien", "female", "unknown", None),
    "onslow": ("George Onslow", "male", "unknown", None),
    "sophia": ("Sophia Newdigate", "female", "unknown", None),
    "gray": ("Thomas Gray", "male", "unknown", None),
}

# no-entry plants map to None
LETTERS18 = [
    ("DRAPER_002", "boddam", "pickering", 1760, "other_family", 400, False,
     [("hooka", "hookah"), ("cream-cann", "cream-can"), ("Moorman", None),
      ("Hubble-Bubble", None), ("Ailloon", None)]),
    ("DRAPER_011", "draper", "pickering", 1761, "other_family", 250, False,
     [("dubash", None), ("gomastah", None), ("kitmutgar", None),
      ("punkah", None), ("shroff", None)]),
    ("FOUNDLI_126", "barnes", "leicester", 1762, "other_acquaintances", 60, True,
     [("fondlen-house", "foundling-house")]),
    ("DRAPER_015", "draper", "pickering", 1763, "other_family", 180, False,
     [("cowle", None), ("banyan-day", None)]),
    ("TWINING_005", "twining", "danielt", 1764, "nuclear_family", 700, True,
     [("pudding-less", "puddingless"), ("floreat", "floreat"),
      ("jumpable", "jumpable"), ("moonery", "moonery"), ("tittup", "tittup")]),
    ("COLTON_008", "colton", "white", 1765, "other_acquaintances", 220, False,
     [("inspectress", "inspectress")]),
    ("TWINING_012", "twining", "danielt", 1766, "nuclear_family", 200, False,
     [("fellow-labourer", None), ("soul-cheering", None)]),
    ("GRAY_065", "walpole", "gray", 1768, "close_friends", 290, True,
     [("sentimental", "sentimental")]),
    ("WALPOL_018", "walpole", "gray", 1769, "close_friends", 150, False,
     [("Pelhamized", None)]),
    ("LENNOX_031", "lennox", "obrien", 1770, "close_friends", 260, False,
     [("funny", "funny")]),
    ("NEWDIG_027", "newdigate", "sophia", 1773, "nuclear_family", 310, False,
     [("miliary-fever", "miliary-fever"), ("mooning", "mooning")]),
    ("BURNEY_014", "burney", "crisp", 1775, "close_friends", 300, False,
     [("anecdote-monger", "anecdote-monger")]),
    ("FILMER_004", "filmer", "onslow", 1775, "close_friends", 200, False,
     [("lumber-room", "lumber-room")]),
    ("BURNEY_019", "burney", "crisp", 1777, "close_friends", 280, False,
     [("interference", "interference")]),
    ("SANCHO_016", "sancho", "stevenson", 1777, "close_friends", 350, True,
     [("blacky", "blacky"), ("lovee", "lovee"),
      ("Merry-Andrew-like", "merry-Andrew-like"), ("namby-pamby", "namby-pamby")]),
    ("THRALE_023", "thrale", "burney", 1777, "close_friends", 320, False,
     [("dénouement", "dénouement")]),
]

# Table targets: per-category running words
TABLE17 = {
    "total": 36265,
    "gender": {"male": 23459, "female": 12806},
    "rank": {"royalty": 3899, "nobility": 5038, "gentry": 11509, "clergy": 9659,
             "professionals": 3675, "merchants": 860, "other_non_gentry": 1625},
    "relationship": {"nuclear_family": 15045, "other_family": 0,
                     "close_friends": 7467, "other_acquaintances": 13753},
    "age": {"older": 15000, "younger": 12167, "none": 9098},
}
TABLE18 = {
    "total": 47864,
    "gender": {"male": 29225, "female": 18639},
    "rank": {"royalty": 4067, "nobility": 6998, "gentry": 10924, "clergy": 8976,
             "professionals": 10847, "merchants": 2496, "other_non_gentry": 3556},
    "relationship": {"nuclear_family": 12754, "other_family": 6534,
                     "close_friends": 14771, "other_acquaintances": 13805},
    "age": {"older": 20000, "younger": 24000, "none": 3864},
}

EXPECTED_RENDER17 = {
    "gender": {"male": "17", "female": "11"},
    "rank": {"royalty": "26", "professionals": "24", "nobility": "16",
             "gentry": "13", "clergy": "11", "merchants": "0", "other_non_gentry": "0"},
    "relationship": {"close_friends": "25", "other_acquaintances": "18",
                     "nuclear_family": "6", "other_family": "–"},
}
EXPECTED_RENDER18 = {
    "gender": {"male": "5", "female": "4"},
    "rank": {"other_non_gentry": "14", "clergy": "7", "nobility": "4",
             "professionals": "4", "gentry": "3", "royalty": "0", "merchants": "0"},
    "relationship": {"close_friends": "7", "nuclear_family": "5",
                     "other_family": "3", "other_acquaintances": "1"},
}

# ---------------------------------------------------------------------------
# filler text
# ---------------------------------------------------------------------------

COMMON_WORDS = """
the and of to i you my that in it is for be with not your but haue me he his
as this we will all so by at shall which are on if from or was them what out
no do more when there vp then their she who how can did one vnto would may
good man time day like now her well make other into our great some such god
come know see lord sir let heere giue thinke much loue thanke pray desire
send word letter hand heart life world thing place house land towne yeares
monie friend brother sister father mother wife sonne daughter children state
reason cause matter warre peace armie church lawe right truth order part
power honour seruice favour paine care hope feare griefe ioy mind bodie soule
health sicknesse death night morning weeke moneth winter sommer spring corne
bread wine beere horse cattel sheepe woode fire water aire earth sea ship
saile winde raine snowe colde heate light darke newes bookes paper penne inke
answer question promise oath fayth doubt trust helpe neede want rest worke
labour iourney roade bridge gate wall doore chamber table bedde cloth gowne
shooe hatte ringe iewell golde siluer copper stone glasse lanterne candell
supper dinner breakfast garden field medow wood streame mill barne stable
keepe holde bring carrie fetch buie sell paie owe lende borrow giue take
"""

RARE_STEMS = """
almanack arbour bailiff banneret bodkin bolster brazier brewster buckler
burgess buttery carrack casement chandler chapman clothier cooper cordwainer
playne rushes currier draper dyer falconer farrier fletcher forester fowler
freeholder gaoler glover grocer haberdasher hatter herald hosier husbandman
ioyner keeper lederer limner lorimer maltster mariner mason mercer messenger
miller milliner minstrel netmaker ostler pargeter pewterer pinner pleader
plowman porter potter poulter quarrier ropemaker saddler sawyer scrivener
seamster shearman shepheard shipwright skinner smith spurrier stationer
stockinger tailour tanner thatcher tiler tinker turner vintner wainwright
warrener weauer wheelwright whitesmith woodward wooler yeoman abbesse
anchoress chantry chasuble cloister crosier diocese friary homilie hymnal
lectern matins missal nunnery prebend psalter reredos rochet thurible vestry
alecost barleycorn bilberry burdock calamint centaury cinquefoil coltsfoot
comfrey costmary cowslip dittany eyebright feverfew fumitory germander
hellebore henbane hyssop lovage lungwort madder mallow mandrake marjoram
mugwort nightshade pennyroyal pimpernel plantain purslane ragwort rampion
saffron sanicle scabious selfheal sorrel southernwood spearmint spurge
tansy tormentil valerian vervain woodruff wormwood yarrow
"""

RARE_SUFFIXES = ["", "s", "e", "es", "ing", "ed", "er", "ers", "est", "ie", "full"]

PROPER_NAMES = """
Hartford Whitstable Douai Antwerpe Amsterdame Bruxelles Dover Canterburie
Maidstone Rochester Sandwich Yarmouth Norwich Lincolne Yorke Oxforde
Cambridg Bristowe Exceter Plimouth Glocester Winchester Carlile Durham
Heidelberg Prage Vienna Hamborough Rotterdam Leyden Delft Hague Calais
Rouen Bourdeaux Lyons Geneva Turin Genoa Venice Florence Millan Naples
Kenrick Pennyfeather Oxenbridge Whitgift Sandys Fairfax Rupert Digby
Culpeper Wharton Savile Strafford Laud Hampden Pym Falkland Capell
"""

FOREIGN_WORDS = "dominus gratia ecclesia regnum bellum concilium pax fides natura corpus".split()
ABBREV_WORDS = "Mr Dr Sr Esq Capt Col Ld".split()


def build_vocab(plant_forms):
    common = COMMON_WORDS.split()
    stems = RARE_STEMS.split()
    rare = []
    for stem in stems:
        for suffix in RARE_SUFFIXES:
            rare.append(stem + suffix)
    plants = {p.casefold() for p in plant_forms}
    common = [w for w in common if w.casefold() not in plants]
    rare = sorted(set(rare) - set(common) - plants)
    propers = [w for w in PROPER_NAMES.split() if w.casefold() not in plants]
    return common, rare, propers


class TokenStream:
    """Deterministic filler-token source with a fresh-rare-form tail."""

    def __init__(self, rng, common, rare, propers, rare_rate=0.05,
                 proper_rate=0.02, foreign_rate=0.004, abbrev_rate=0.004):
        self.rng = rng
        self.common = common
        self.rare = list(rare)
        self.rare_pos = 0
        self.propers = propers
        self.rare_rate = rare_rate
        self.proper_rate = proper_rate
        self.foreign_rate = foreign_rate
        self.abbrev_rate = abbrev_rate
        # zipf-ish weights over the common vocabulary
        self.weights = [1.0 / (i + 1) for i in range(len(common))]

    def _common_word(self):
        return self.rng.choices(self.common, weights=self.weights, k=1)[0]

    def next_plain(self):
        """An unflagged filler token surface."""
        r = self.rng.random()
        if r < self.rare_rate and self.rare_pos < len(self.rare):
            word = self.rare[self.rare_pos]
            self.rare_pos += 1
            return word
        return self._common_word()

    def next_flagged(self):
        """(surface, flag) for proper noun / foreign / abbreviation filler."""
        r = self.rng.random()
        if r < self.foreign_rate / (self.foreign_rate + self.abbrev_rate + self.proper_rate):
            return self.rng.choice(FOREIGN_WORDS), "foreign"
        if r < (self.foreign_rate + self.abbrev_rate) / (
            self.foreign_rate + self.abbrev_rate + self.proper_rate
        ):
            return self.rng.choice(ABBREV_WORDS), "abbreviation"
        return self.rng.choice(self.propers), "proper_noun"

    def flagged_share(self):
        return self.proper_rate + self.foreign_rate + self.abbrev_rate


def letter_tokens(stream, n_words, plants, allow_flags=True):
    """Token list for one letter: filler with plants at spread positions."""
    plant_at = {}
    for i, plant in enumerate(plants):
        pos = (i + 1) * n_words // (len(plants) + 1)
        while pos in plant_at:
            pos += 1
        plant_at[pos] = plant
    tokens = []
    for i in range(n_words):
        if i in plant_at:
            tokens.append((plant_at[i], []))
            continue
        if allow_flags and stream.rng.random() < stream.flagged_share():
            surface, flag = stream.next_flagged()
            tokens.append((surface, [flag]))
        else:
            tokens.append((stream.next_plain(), []))
    return tokens


def tokens_to_objs(tokens):
    objs = []
    offset = 0
    for surface, flags in tokens:
        objs.append({"s": surface, "o": offset, "f": flags})
        offset += len(surface) + 1
    return objs


def tokens_to_text(tokens, rng):
    """Render a token list as raw text with period furniture.

    Sprinkles punctuation, wraps one filler token in editorial brackets
    and plants one superscript caret; the round-trip token count and the
    folded forms are unchanged (the caret is collapsed by the tokenizer,
    the bracketed token is flagged editorial).
    """
    chunks = []
    plain_idx = [i for i, (s, f) in enumerate(tokens) if not f and len(s) > 3]
    bracket_at = plain_idx[len(plain_idx) // 3] if plain_idx else -1
    caret_at = plain_idx[2 * len(plain_idx) // 3] if len(plain_idx) > 1 else -1
    if caret_at == bracket_at:
        caret_at = -1
    plants = {i for i, (s, f) in enumerate(tokens) if f == []}
    for i, (surface, flags) in enumerate(tokens):
        chunk = surface
        if i == bracket_at:
            chunk = "[" + chunk + "]"
        elif i == caret_at:
            chunk = chunk[0] + "^" + chunk[1:]
        if i + 1 < len(tokens) and rng.random() < 0.12:
            chunk += rng.choice([",", ",", ";", "."])
        chunks.append(chunk)
    return " ".join(chunks) + "."


def build_lexicon_file(path):
    plant_variants = {}
    for letters in (LETTERS17, LETTERS18):
        for (_id, _s, _r, _y, _rel, _w, _t, plants) in letters:
            for surface, lemma in plants:
                if lemma is None:
                    continue
                form = surface.casefold()
                if form not in UNLISTED_FORMS:
                    plant_variants.setdefault(lemma, set()).add(form)
    lines = []
    for table in (E17, E18):
        for lemma, pos, kind, src, year, ht, extra_senses, extra_variants in table:
            variants = {lemma.casefold()}
            variants |= plant_variants.get(lemma, set())
            variants |= set(extra_variants)
            senses = [
                {
                    "sense_id": "s1",
                    "gloss": f"{lemma} ({pos}), main sense",
                    "first_attestation_year": year,
                    "ht_path": ht,
                }
            ]
            for i, (sy, gloss, spath) in enumerate(extra_senses, start=2):
                senses.append(
                    {
                        "sense_id": f"s{i}",
                        "gloss": gloss,
                        "first_attestation_year": sy,
                        "ht_path": spath,
                    }
                )
            ety = {"kind": kind}
            if src:
                ety["source_language"] = src
            lines.append(
                json.dumps(
                    {
                        "lemma": lemma,
                        "pos": pos,
                        "variants": sorted(variants),
                        "etymology": ety,
                        "senses": senses,
                    },
                    ensure_ascii=False,
                    sort_keys=True,
                )
            )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# filler allocation: 4-axis transportation (gender x rank x rel x age)
# ---------------------------------------------------------------------------

def sequential_allocation(marginals):
    """Chunks (g, r, rel, age, words) exactly exhausting all four marginals."""
    axes = [dict(m) for m in marginals]
    totals = [sum(m.values()) for m in axes]
    assert len(set(totals)) == 1, f"marginal totals disagree: {totals}"
    order = [sorted(m, key=str) for m in axes]
    chunks = []
    while True:
        picks = []
        for m, keys in zip(axes, order):
            key = next((k for k in keys if m[k] > 0), None)
            if key is None:
                return chunks
            picks.append(key)
        amount = min(axes[i][picks[i]] for i in range(4))
        for i in range(4):
            axes[i][picks[i]] -= amount
        chunks.append((*picks, amount))


def filler_letters(tag, chunks, stream, rng, years, burn_year, burn_count=10):
    """Realize allocation chunks as letters by synthetic persona writers.

    The first ``burn_count`` letters are dated at the period start so the
    high-frequency vocabulary makes its first appearance in small early
    letters instead of piling onto one big scripted letter.
    """
    persons = {}
    letters = []
    idx = 1
    persona_seq = {}
    for gender, rank, rel, age, words in chunks:
        pkey = (gender, rank, age)
        if pkey not in persons:
            n = persona_seq.setdefault((gender, rank), 0) + 1
            persona_seq[(gender, rank)] = n
            persons[pkey] = f"{tag}_{gender[0]}{rank[:4]}{age[0]}{n}"
        pid = persons[pkey]
        remaining = words
        while remaining > 0:
            size = min(remaining, rng.randint(60, 180))
            if 0 < remaining - size < 60:
                size = remaining
            year = burn_year if idx <= burn_count else years[idx % len(years)]
            letters.append(
                {
                    "id": f"{tag}_{idx:03d}",
                    "sender": pid,
                    "year": year,
                    "relationship": rel,
                    "size": size,
                }
            )
            remaining -= size
            idx += 1
    return persons, letters


def assemble_corpus(path, persons_named, letters_spec, table, rng, plant_forms,
                    period, filler_tag, ban_forties=False):
    """Write one corpus JSONL hitting every marginal in ``table`` exactly."""
    common, rare, propers = build_vocab(plant_forms)
    stream = TokenStream(rng, common, rare, propers)

    # residual marginals once the scripted letters are placed
    by_gender = dict(table["gender"])
    by_rank = dict(table["rank"])
    by_rel = dict(table["relationship"])
    by_age = dict(table["age"])
    for (lid, sender, recipient, year, rel, words, is_text, plants) in letters_spec:
        name, gender, rank, birth = persons_named[sender]
        by_gender[gender] -= words
        by_rank[rank] -= words
        by_rel[rel] -= words
        if birth is None:
            by_age["none"] -= words
        elif year - birth >= 40:
            by_age["older"] -= words
        else:
            by_age["younger"] -= words
    for m in (by_gender, by_rank, by_rel, by_age):
        for k, v in m.items():
            assert v >= 0, f"scripted letters overrun marginal {k}: {v}"

    chunks = sequential_allocation([by_gender, by_rank, by_rel, by_age])
    years = list(range(period[0] + 1, period[1]))
    filler_persons, filler = filler_letters(
        filler_tag, chunks, stream, rng, years, burn_year=period[0]
    )

    person_objs = {}
    for pid, (name, gender, rank, birth) in persons_named.items():
        obj = {"type": "person", "id": pid, "name": name, "gender": gender, "rank": rank}
        if birth is not None:
            obj["birth_year"] = birth
        person_objs[pid] = obj

    filler_years = {}
    for letter in filler:
        filler_years.setdefault(letter["sender"], []).append(letter["year"])
    given = 1
    for pkey, pid in filler_persons.items():
        gender, rank, age = pkey
        years_of = filler_years.get(pid, [period[0] + 1])
        if age == "older":
            birth = min(years_of) - (45 if not ban_forties else 52)
        elif age == "younger":
            birth = max(years_of) - 38
        else:
            birth = None
        obj = {
            "type": "person",
            "id": pid,
            "name": f"{'Margaret' if gender == 'female' else 'Walter'} {filler_tag.title()}{given}",
            "gender": gender,
            "rank": rank,
        }
        given += 1
        if birth is not None:
            obj["birth_year"] = birth
        person_objs[pid] = obj
    recipient_id = f"{filler_tag}_recipient"
    person_objs[recipient_id] = {
        "type": "person", "id": recipient_id, "name": "Sundry Correspondents",
        "gender": "unknown", "rank": "unknown",
    }

    letter_objs = []
    for (lid, sender, recipient, year, rel, words, is_text, plants) in letters_spec:
        plant_surfaces = [s for s, _l in plants]
        tokens = letter_tokens(stream, words, plant_surfaces, allow_flags=not is_text)
        obj = {
            "type": "letter",
            "id": lid,
            "collection": lid.split("_")[0],
            "year": year,
            "sender": sender,
            "recipient": recipient,
            "relationship": rel,
        }
        if is_text:
            obj["text"] = tokens_to_text(tokens, rng)
            assert len(tokenize(obj["text"])) == words, f"text letter {lid} count drift"
        else:
            obj["tokens"] = tokens_to_objs(tokens)
        letter_objs.append(obj)
    for letter in filler:
        tokens = letter_tokens(stream, letter["size"], [])
        letter_objs.append(
            {
                "type": "letter",
                "id": letter["id"],
                "collection": filler_tag,
                "year": letter["year"],
                "sender": letter["sender"],
                "recipient": recipient_id,
                "relationship": letter["relationship"],
                "tokens": tokens_to_objs(tokens),
            }
        )

    with open(path, "w", encoding="utf-8") as fh:
        for pid in sorted(person_objs):
            fh.write(json.dumps(person_objs[pid], ensure_ascii=False, sort_keys=True) + "\n")
        for obj in sorted(letter_objs, key=lambda o: (o["year"], o["id"])):
            fh.write(json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# decision logs and review plans
# ---------------------------------------------------------------------------

def planted_pool(letters_spec):
    """(form, letter_id, lemma) in letter (year, id) order, token order."""
    pool = []
    for (lid, _s, _r, year, _rel, _w, _t, plants) in sorted(
        letters_spec, key=lambda e: (e[3], e[0])
    ):
        for surface, lemma in plants:
            pool.append((surface.casefold(), lid, lemma))
    return pool


def write_decision_log(path, pool, lexicon, reviewer):
    entries_by_lemma = {}
    for e in lexicon.entries:
        entries_by_lemma[e.lemma] = e
    lines = []
    minute = 0
    for i, (form, letter_id, lemma) in enumerate(pool):
        obj = {
            "candidate_key": {"form": form, "letter_id": letter_id},
            "reviewer": reviewer,
            "timestamp": f"2021-02-15T{10 + minute // 60:02d}:{minute % 60:02d}:00Z",
        }
        minute += 1
        if lemma is None:
            obj["status"] = "no_entry"
        else:
            entry = entries_by_lemma[lemma]
            obj["status"] = "accepted"
            obj["entry"] = {"lemma": entry.lemma, "pos": entry.pos}
            if len(entry.senses) > 1 or i % 2 == 0:
                obj["sense_id"] = "s1"
        lines.append(json.dumps(obj, ensure_ascii=False))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_review_plan(path, corpus, letters_spec, period, table_total):
    pool = planted_pool(letters_spec)
    letters = corpus.letter_index()
    selected = {}
    forms = {}
    achieved = {}
    for form, lid, _lemma in pool:
        letter = letters[lid]
        key = sampling.bucket_key_for(corpus, letter)
        if lid not in selected.setdefault(key, []):
            selected[key].append(lid)
            achieved[key] = achieved.get(key, 0) + letter.word_count
        forms.setdefault(lid, []).append(form)
    for key in selected:
        selected[key].sort(key=lambda lid: (letters[lid].year, lid))
    plan = sampling.SamplingPlan(
        period=period,
        seed=0,
        target_words_per_bucket=0.0,
        selected=selected,
        candidate_forms=forms,
        achieved=achieved,
    )
    sampling.save_plan(plan, path)
    return plan


def write_config(path, century, table_total, period):
    cfg = {
        "period": list(period),
        "target_words": 2000000,
        "seed": 42,
        "window_years": 40,
        "age_split": 40,
        "normalizer": {"k": 5, "max_cost": 2.5},
        "paths": {
            "corpus": f"fixtures/ceec{century}.jsonl",
            "lexicon": "fixtures/oed-mini.jsonl",
            "index_dir": f"out/index{century}",
            "plan": f"out/plan{century}.json",
            "log": f"fixtures/decisions{century}.jsonl",
            "records": f"out/records{century}.jsonl",
            "no_entry": f"out/no_entry{century}.jsonl",
            "reports_dir": f"out/reports{century}",
        },
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cfg, fh, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def check(cond, message):
    if not cond:
        raise AssertionError(message)


def verify_century(century, corpus_path, letters_spec, persons_named, table,
                   expected_render, lexicon, expected_records, expected_types,
                   period, ratio_target):
    corpus = parse_corpus(corpus_path, period=period)
    check(running_words(corpus) == table["total"],
          f"c{century}: total words {running_words(corpus)} != {table['total']}")
    for gender, want in table["gender"].items():
        got = running_words(
            corpus, lambda l: corpus.persons[l.sender_id].gender == gender
        )
        check(got == want, f"c{century}: gender {gender} {got} != {want}")
    for rank, want in table["rank"].items():
        got = running_words(corpus, lambda l: corpus.persons[l.sender_id].rank == rank)
        check(got == want, f"c{century}: rank {rank} {got} != {want}")
    for rel, want in table["relationship"].items():
        got = running_words(corpus, lambda l: l.relationship == rel)
        check(got == want, f"c{century}: rel {rel} {got} != {want}")

    def age_words(pred):
        total = 0
        for letter in corpus.letters:
            birth = corpus.persons[letter.sender_id].birth_year
            if pred(None if birth is None else letter.year - birth):
                total += letter.word_count
        return total

    check(age_words(lambda a: a is not None and a >= 40) == table["age"]["older"],
          f"c{century}: older-40 words off")
    check(age_words(lambda a: a is not None and a < 40) == table["age"]["younger"],
          f"c{century}: younger-40 words off")
    check(age_words(lambda a: a is None) == table["age"]["none"],
          f"c{century}: unknown-age words off")

    # planted forms really are first appearances in their letters
    first_map = sampling.first_appearances(corpus)
    pool_expect = planted_pool(letters_spec)
    for form, lid, _lemma in pool_expect:
        check(form in first_map.get(lid, ()),
              f"c{century}: {form} not first-appearing in {lid}")

    # normalizer resolves every mapped candidate at rank 1
    normalizer = Normalizer(lexicon)
    for form, lid, lemma in pool_expect:
        if lemma is None:
            continue
        cands = normalizer.normalize(form)
        check(cands and cands[0].entry.lemma == lemma,
              f"c{century}: {form} -> "
              f"{cands[0].entry.lemma if cands else 'nothing'} != {lemma}")

    # end-to-end: sample everything, replay the shipped log
    buckets = sampling.build_buckets(corpus, period)
    plan = sampling.draw_sample(buckets, 2000000, 42, period=period)
    check(sum(len(v) for v in plan.selected.values()) == len(corpus.letters),
          f"c{century}: full-target plan must select every letter")
    pool = sampling.candidate_pool(plan, first_map)
    log = classify.read_decision_log(
        os.path.join(FIXTURES, f"decisions{century}.jsonl")
    )
    records = classify.classify_all(pool, log, corpus, lexicon, 40)
    check(len(records) == expected_records,
          f"c{century}: {len(records)} records != {expected_records}")
    check(classify.type_count(records) == expected_types,
          f"c{century}: {classify.type_count(records)} types != {expected_types}")

    for axis, expected in expected_render.items():
        report = analytics.frequency_report(records, corpus, axis)
        got = {row.value: analytics.render_per_10k(row.per_10k) for row in report.rows}
        for value, want in expected.items():
            check(got.get(value) == want,
                  f"c{century}: {axis}/{value} renders {got.get(value)} != {want}")

    # candidate-pool ratio of a period-share sample vs the full pool
    plan9 = sampling.draw_sample(buckets, ratio_target, 42, period=period)
    pool9 = sampling.candidate_pool(plan9, first_map)
    ratio = len(pool9) / len(pool)
    check(0.07 <= ratio <= 0.11, f"c{century}: pool ratio {ratio:.3f} outside [0.07, 0.11]")
    return corpus, records, ratio


def verify_breakdowns(records17, records18):
    def counts(records, dim):
        return analytics.breakdown(records, dim).counts

    check(counts(records17, "pos") == {"noun": 24, "adjective": 8, "verb": 5, "adverb": 5},
          f"c17 pos breakdown: {counts(records17, 'pos')}")
    check(counts(records17, "etymology_kind") == {
        "derivation": 18, "compounding": 2, "conversion": 1, "borrowing": 19, "unknown": 2
    }, f"c17 etymology: {counts(records17, 'etymology_kind')}")
    check(counts(records17, "source_language") == {
        "Latin": 13, "French": 2, "Italian": 2, "German": 2
    }, f"c17 sources: {counts(records17, 'source_language')}")
    check(counts(records17, "ht_level_1") == {"society": 16, "the world": 15, "the mind": 11},
          f"c17 ht1: {counts(records17, 'ht_level_1')}")
    ht2 = counts(records17, "ht_level_2")
    check(ht2.get("society » authority") == 5, f"c17 authority: {ht2}")
    check(ht2.get("the mind » mental capacity") == 4, f"c17 mental capacity: {ht2}")
    check(len(ht2) == 22, f"c17 ht2 categories: {len(ht2)}")

    check(counts(records18, "pos") == {"noun": 14, "adjective": 5, "verb": 1, "adverb": 1},
          f"c18 pos: {counts(records18, 'pos')}")
    check(counts(records18, "etymology_kind") == {
        "derivation": 12, "compounding": 4, "conversion": 2, "borrowing": 2, "unknown": 1
    }, f"c18 etymology: {counts(records18, 'etymology_kind')}")
    check(counts(records18, "ht_level_1") == {"the world": 9, "society": 6, "the mind": 6},
          f"c18 ht1: {counts(records18, 'ht_level_1')}")
    ht2b = counts(records18, "ht_level_2")
    check(ht2b.get("society » leisure") == 3 and ht2b.get("the mind » emotion") == 3,
          f"c18 ht2: {ht2b}")

    ante17 = analytics.antedatings(records17)
    types17 = {r.lemma for r in ante17}
    check(types17 == {
        "covenanting", "crawling", "efficaciously", "helpfulness", "hint",
        "incognito", "joke", "landgravine", "malignancy", "oversweetness",
        "packet-boat", "plenipotentiary", "statement", "tea",
    }, f"c17 antedated types: {sorted(types17)}")
    deltas = {r.lemma: r.delta_years for r in ante17}
    check(deltas["statement"] == -108 and deltas["tea"] == -12
          and deltas["packet-boat"] == -1, f"antedating deltas: {deltas}")
    ante18 = {r.lemma for r in analytics.antedatings(records18)}
    check(ante18 == {"hookah", "inspectress", "interference", "merry-Andrew-like",
                     "mooning", "puddingless"}, f"c18 antedated: {sorted(ante18)}")

    boundary = [r for r in records17 if r.delta_years == 40]
    check(any(r.lemma == "compliance" for r in boundary), "40-year boundary record missing")

    per_type = {}
    for r in records18:
        per_type[r.type_key] = per_type.get(r.type_key, 0) + 1
    check(all(v == 1 for v in per_type.values()), "c18 type frequencies must all be 1")


def verify_age(corpus17, records17, corpus18, records18):
    rep40 = analytics.frequency_report(records17, corpus17, "age_group", age_split=40)
    got40 = {r.value: analytics.render_per_10k(r.per_10k) for r in rep40.rows}
    check(got40 == {"40 and over": "21", "under 40": "10"}, f"c17 age split 40: {got40}")
    rep50 = analytics.frequency_report(records17, corpus17, "age_group", age_split=50)
    got50 = {r.value: analytics.render_per_10k(r.per_10k) for r in rep50.rows}
    check(got50 == {"50 and over": "18", "under 50": "15"}, f"c17 age split 50: {got50}")
    rep18 = analytics.frequency_report(records18, corpus18, "age_group", age_split=40)
    got18 = {r.value: analytics.render_per_10k(r.per_10k) for r in rep18.rows}
    check(got18 == {"under 40": "5", "40 and over": "4"}, f"c18 age split 40: {got18}")


def main():
    os.makedirs(FIXTURES, exist_ok=True)
    all_plants = [s for (*_, plants) in LETTERS17 for s, _ in plants]
    all_plants += [s for (*_, plants) in LETTERS18 for s, _ in plants]
    folded = [p.casefold() for p in all_plants]
    check(len(set(folded)) == len(folded), "planted forms must be distinct")

    lex_path = os.path.join(FIXTURES, "oed-mini.jsonl")
    build_lexicon_file(lex_path)
    lexicon = load_lexicon(lex_path)
    check(len(lexicon.entries) == 63, f"lexicon has {len(lexicon.entries)} entries")

    rng17 = random.Random(RNG_SEED)
    path17 = os.path.join(FIXTURES, "ceec17.jsonl")
    assemble_corpus(path17, PERSONS17, LETTERS17, TABLE17, rng17, folded,
                    (1640, 1660), "FILL17", ban_forties=True)
    rng18 = random.Random(RNG_SEED + 1)
    path18 = os.path.join(FIXTURES, "ceec18.jsonl")
    assemble_corpus(path18, PERSONS18, LETTERS18, TABLE18, rng18, folded,
                    (1760, 1780), "FILL18", ban_forties=False)

    pool17 = planted_pool(LETTERS17)
    check(len(pool17) == 63, f"17th pool {len(pool17)} != 63")
    pool18 = planted_pool(LETTERS18)
    check(len(pool18) == 34, f"18th pool {len(pool18)} != 34")
    check(sum(1 for *_x, lemma in pool18 if lemma is None) == 13, "18th no-entry != 13")

    write_decision_log(os.path.join(FIXTURES, "decisions17.jsonl"), pool17, lexicon, "ts")
    write_decision_log(os.path.join(FIXTURES, "decisions18.jsonl"), pool18, lexicon, "jk")

    corpus17, records17, ratio17 = verify_century(
        17, path17, LETTERS17, PERSONS17, TABLE17, EXPECTED_RENDER17,
        lexicon, 53, 42, (1640, 1660), 1800,
    )
    corpus18, records18, ratio18 = verify_century(
        18, path18, LETTERS18, PERSONS18, TABLE18, EXPECTED_RENDER18,
        lexicon, 21, 21, (1760, 1780), 3600,
    )
    verify_breakdowns(records17, records18)
    verify_age(corpus17, records17, corpus18, records18)

    write_review_plan(os.path.join(FIXTURES, "plan17_review.json"),
                      corpus17, LETTERS17, (1640, 1660), TABLE17["total"])
    write_review_plan(os.path.join(FIXTURES, "plan18_review.json"),
                      corpus18, LETTERS18, (1760, 1780), TABLE18["total"])
    write_config(os.path.join(FIXTURES, "pipeline17.json"), 17, TABLE17["total"], (1640, 1660))
    write_config(os.path.join(FIXTURES, "pipeline18.json"), 18, TABLE18["total"], (1760, 1780))

    # the five attested misspellings resolve at rank 1
    normalizer = Normalizer(lexicon)
    gold = [
        ("Malignencye", "malignancy"), ("condisention", "condescension"),
        ("tee", "tea"), ("hooka", "hookah"), ("fondlen", "foundling-house"),
    ]
    for form, lemma in gold:
        cands = normalizer.normalize(form)
        check(cands and cands[0].entry.lemma == lemma,
              f"misspelling {form} -> {cands[0].entry.lemma if cands else None}")

    print(f"fixtures ok: pool ratios c17={ratio17:.3f} c18={ratio18:.3f}")
    print(f"records: c17 {len(records17)}/42 types, c18 {len(records18)}/21 types")


if __name__ == "__main__":
    sys.exit(main())
