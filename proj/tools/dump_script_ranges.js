// Dumps Unicode Script property ranges as JSON using the regex engine's
// property data. Output: {"scripts": {...name -> [[lo,hi],...]}, "unicode": "..."}.
// Slow full sweep; the caller caches the result.

const SCRIPTS = [
  "Adlam", "Ahom", "Anatolian_Hieroglyphs", "Arabic", "Armenian", "Avestan",
  "Balinese", "Bamum", "Bassa_Vah", "Batak", "Bengali", "Bhaiksuki", "Bopomofo",
  "Brahmi", "Braille", "Buginese", "Buhid", "Canadian_Aboriginal", "Carian",
  "Caucasian_Albanian", "Chakma", "Cham", "Cherokee", "Chorasmian", "Common",
  "Coptic", "Cuneiform", "Cypriot", "Cypro_Minoan", "Cyrillic", "Deseret",
  "Devanagari", "Dives_Akuru", "Dogra", "Duployan", "Egyptian_Hieroglyphs",
  "Elbasan", "Elymaic", "Ethiopic", "Garay", "Georgian", "Glagolitic", "Gothic",
  "Grantha", "Greek", "Gujarati", "Gunjala_Gondi", "Gurmukhi", "Gurung_Khema",
  "Han", "Hangul", "Hanifi_Rohingya", "Hanunoo", "Hatran", "Hebrew", "Hiragana",
  "Imperial_Aramaic", "Inherited", "Inscriptional_Pahlavi",
  "Inscriptional_Parthian", "Javanese", "Kaithi", "Kannada", "Katakana",
  "Kawi", "Kayah_Li", "Kharoshthi", "Khitan_Small_Script", "Khmer", "Khojki",
  "Khudawadi", "Kirat_Rai", "Lao", "Latin", "Lepcha", "Limbu", "Linear_A",
  "Linear_B", "Lisu", "Lycian", "Lydian", "Mahajani", "Makasar", "Malayalam",
  "Mandaic", "Manichaean", "Marchen", "Masaram_Gondi", "Medefaidrin",
  "Meetei_Mayek", "Mende_Kikakui", "Meroitic_Cursive", "Meroitic_Hieroglyphs",
  "Miao", "Modi", "Mongolian", "Mro", "Multani", "Myanmar", "Nabataean",
  "Nag_Mundari", "Nandinagari", "New_Tai_Lue", "Newa", "Nko", "Nushu",
  "Nyiakeng_Puachue_Hmong", "Ogham", "Ol_Chiki", "Ol_Onal", "Old_Hungarian",
  "Old_Italic", "Old_North_Arabian", "Old_Permic", "Old_Persian", "Old_Sogdian",
  "Old_South_Arabian", "Old_Turkic", "Old_Uyghur", "Oriya", "Osage", "Osmanya",
  "Pahawh_Hmong", "Palmyrene", "Pau_Cin_Hau", "Phags_Pa", "Phoenician",
  "Psalter_Pahlavi", "Rejang", "Runic", "Samaritan", "Saurashtra", "Sharada",
  "Shavian", "Siddham", "SignWriting", "Sinhala", "Sogdian", "Sora_Sompeng",
  "Soyombo", "Sundanese", "Sunuwar", "Syloti_Nagri", "Syriac", "Tagalog",
  "Tagbanwa", "Tai_Le", "Tai_Tham", "Tai_Viet", "Takri", "Tamil", "Tangsa",
  "Tangut", "Telugu", "Thaana", "Thai", "Tibetan", "Tifinagh", "Tirhuta",
  "Todhri", "Toto", "Tulu_Tigalari", "Ugaritic", "Vai", "Vithkuqi", "Wancho",
  "Warang_Citi", "Yezidi", "Yi", "Zanabazar_Square",
];

const MAX = 0x110000;
const chars = new Array(MAX);
for (let cp = 0; cp < MAX; cp++) {
  if (cp >= 0xd800 && cp <= 0xdfff) { chars[cp] = null; continue; }
  chars[cp] = String.fromCodePoint(cp);
}

const result = {};
const claimed = new Uint8Array(MAX);
for (const name of SCRIPTS) {
  let re;
  try {
    re = new RegExp(`\\p{Script=${name}}`, "u");
  } catch (e) {
    process.stderr.write(`skip unknown script ${name}\n`);
    continue;
  }
  const ranges = [];
  let lo = -1;
  for (let cp = 0; cp < MAX; cp++) {
    const m = chars[cp] !== null && re.test(chars[cp]);
    if (m) {
      if (claimed[cp]) throw new Error(`cp ${cp} claimed twice (${name})`);
      claimed[cp] = 1;
      if (lo < 0) lo = cp;
    } else if (lo >= 0) {
      ranges.push([lo, cp - 1]);
      lo = -1;
    }
  }
  if (lo >= 0) ranges.push([lo, MAX - 1]);
  if (ranges.length) result[name] = ranges;
}

process.stdout.write(
  JSON.stringify({ unicode: process.versions.unicode, scripts: result })
);
