#!/usr/bin/env node
// Dumps toneless pinyin readings for the CJK Unified Ideographs block as
// TSV (char<TAB>reading) on stdout. Characters the library has no reading
// for are skipped. Run `npm install` in tools/ first.
"use strict";

const { pinyin } = require("pinyin-pro");

for (let cp = 0x4e00; cp <= 0x9fff; cp++) {
  const ch = String.fromCodePoint(cp);
  const out = pinyin(ch, { toneType: "none", type: "string", v: true });
  if (out === ch) continue; // unknown to the library: echoes input
  const reading = out.replace(/v/g, "u"); // ü is not ASCII; fold to u
  if (!/^[a-z]+$/.test(reading)) continue;
  process.stdout.write(`${ch}\t${reading}\n`);
}
