// Generated by tools/gen_unicode_tables.py -- do not edit.
// Unicode property snapshot, version 13.0.0.
#pragma once

#include <cstddef>
#include <cstdint>

namespace romankit::ucd {

inline constexpr const char* kUnicodeVersion = "13.0.0";

enum class Script : uint16_t {
  Unknown = 0,
  Common = 1,
  Inherited = 2,
  Adlam = 3,
  Ahom = 4,
  Anatolian_Hieroglyphs = 5,
  Arabic = 6,
  Armenian = 7,
  Avestan = 8,
  Balinese = 9,
  Bamum = 10,
  Bassa_Vah = 11,
  Batak = 12,
  Bengali = 13,
  Bhaiksuki = 14,
  Bopomofo = 15,
  Brahmi = 16,
  Braille = 17,
  Buginese = 18,
  Buhid = 19,
  Canadian_Aboriginal = 20,
  Carian = 21,
  Caucasian_Albanian = 22,
  Chakma = 23,
  Cham = 24,
  Cherokee = 25,
  Chorasmian = 26,
  Coptic = 27,
  Cuneiform = 28,
  Cypriot = 29,
  Cyrillic = 30,
  Deseret = 31,
  Devanagari = 32,
  Dives_Akuru = 33,
  Dogra = 34,
  Duployan = 35,
  Egyptian_Hieroglyphs = 36,
  Elbasan = 37,
  Elymaic = 38,
  Ethiopic = 39,
  Georgian = 40,
  Glagolitic = 41,
  Gothic = 42,
  Grantha = 43,
  Greek = 44,
  Gujarati = 45,
  Gunjala_Gondi = 46,
  Gurmukhi = 47,
  Han = 48,
  Hangul = 49,
  Hanifi_Rohingya = 50,
  Hanunoo = 51,
  Hatran = 52,
  Hebrew = 53,
  Hiragana = 54,
  Imperial_Aramaic = 55,
  Inscriptional_Pahlavi = 56,
  Inscriptional_Parthian = 57,
  Javanese = 58,
  Kaithi = 59,
  Kannada = 60,
  Katakana = 61,
  Kayah_Li = 62,
  Kharoshthi = 63,
  Khitan_Small_Script = 64,
  Khmer = 65,
  Khojki = 66,
  Khudawadi = 67,
  Lao = 68,
  Latin = 69,
  Lepcha = 70,
  Limbu = 71,
  Linear_A = 72,
  Linear_B = 73,
  Lisu = 74,
  Lycian = 75,
  Lydian = 76,
  Mahajani = 77,
  Makasar = 78,
  Malayalam = 79,
  Mandaic = 80,
  Manichaean = 81,
  Marchen = 82,
  Masaram_Gondi = 83,
  Medefaidrin = 84,
  Meetei_Mayek = 85,
  Mende_Kikakui = 86,
  Meroitic_Cursive = 87,
  Meroitic_Hieroglyphs = 88,
  Miao = 89,
  Modi = 90,
  Mongolian = 91,
  Mro = 92,
  Multani = 93,
  Myanmar = 94,
  Nabataean = 95,
  Nandinagari = 96,
  New_Tai_Lue = 97,
  Newa = 98,
  Nko = 99,
  Nushu = 100,
  Nyiakeng_Puachue_Hmong = 101,
  Ogham = 102,
  Ol_Chiki = 103,
  Old_Hungarian = 104,
  Old_Italic = 105,
  Old_North_Arabian = 106,
  Old_Permic = 107,
  Old_Persian = 108,
  Old_Sogdian = 109,
  Old_South_Arabian = 110,
  Old_Turkic = 111,
  Oriya = 112,
  Osage = 113,
  Osmanya = 114,
  Pahawh_Hmong = 115,
  Palmyrene = 116,
  Pau_Cin_Hau = 117,
  Phags_Pa = 118,
  Phoenician = 119,
  Psalter_Pahlavi = 120,
  Rejang = 121,
  Runic = 122,
  Samaritan = 123,
  Saurashtra = 124,
  Sharada = 125,
  Shavian = 126,
  Siddham = 127,
  SignWriting = 128,
  Sinhala = 129,
  Sogdian = 130,
  Sora_Sompeng = 131,
  Soyombo = 132,
  Sundanese = 133,
  Syloti_Nagri = 134,
  Syriac = 135,
  Tagalog = 136,
  Tagbanwa = 137,
  Tai_Le = 138,
  Tai_Tham = 139,
  Tai_Viet = 140,
  Takri = 141,
  Tamil = 142,
  Tangut = 143,
  Telugu = 144,
  Thaana = 145,
  Thai = 146,
  Tibetan = 147,
  Tifinagh = 148,
  Tirhuta = 149,
  Ugaritic = 150,
  Vai = 151,
  Wancho = 152,
  Warang_Citi = 153,
  Yezidi = 154,
  Yi = 155,
  Zanabazar_Square = 156
};

inline constexpr uint16_t kScriptCount = 157;

struct ScriptRange { uint32_t lo; uint32_t hi; uint16_t script; };
struct Range { uint32_t lo; uint32_t hi; };
struct CccEntry { uint32_t cp; uint8_t ccc; };
struct DecompEntry { uint32_t cp; uint32_t offset; uint16_t len; };
struct CompEntry { uint32_t first; uint32_t second; uint32_t composite; };
struct AlgoNameRange { uint32_t lo; uint32_t hi; uint8_t kind; };

// AlgoNameRange kinds: 0 CJK UNIFIED IDEOGRAPH-XXXX, 1 CJK COMPATIBILITY
// IDEOGRAPH-XXXX, 2 TANGUT IDEOGRAPH-XXXX, 3 TANGUT COMPONENT-NNN (decimal,
// cp-0x18800+1), 4 KHITAN SMALL SCRIPT CHARACTER-XXXX, 5 NUSHU
// CHARACTER-XXXX, 6 HANGUL SYLLABLE (jamo composition).

extern const char* const kScriptNames[157];
extern const ScriptRange kScriptRanges[];
extern const size_t kScriptRangeCount;
extern const Range kMarkRanges[];
extern const size_t kMarkRangeCount;
extern const Range kLetterRanges[];
extern const size_t kLetterRangeCount;
extern const uint32_t kDigitZeros[];
extern const size_t kDigitZeroCount;
extern const CccEntry kCcc[];
extern const size_t kCccCount;
extern const DecompEntry kCanonDecomp[];
extern const size_t kCanonDecompCount;
extern const DecompEntry kCompatDecomp[];
extern const size_t kCompatDecompCount;
extern const char32_t kDecompPool[];
extern const CompEntry kComp[];
extern const size_t kCompCount;
extern const AlgoNameRange kAlgoNameRanges[];
extern const size_t kAlgoNameRangeCount;
extern const uint32_t kNameCps[];
extern const size_t kNameCount;
extern const uint32_t kNameOffsets[];  // kNameCount + 1 entries
extern const char kNamePool[];
extern const char* const kJamoL[19];
extern const char* const kJamoV[21];
extern const char* const kJamoT[28];

}  // namespace romankit::ucd
