#!/usr/bin/env node
/** CLI: figures <report.json>... --out <dir> */

import { mkdirSync, readFileSync } from "node:fs";

import { render } from "./render.js";
import { Report, SchemaError, validateReport } from "./schema.js";

export function main(argv: string[]): number {
  const paths: string[] = [];
  let outDir = "";
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "--out") {
      outDir = argv[++i] ?? "";
    } else if (arg === "--help" || arg === "-h") {
      console.log("usage: figures <report.json>... --out <dir>");
      return 0;
    } else {
      paths.push(arg);
    }
  }
  if (!outDir || paths.length === 0) {
    console.error("usage: figures <report.json>... --out <dir>");
    return 2;
  }

  const reports: { report: Report; path: string }[] = [];
  for (const path of paths) {
    let raw: unknown;
    try {
      raw = JSON.parse(readFileSync(path, "utf8"));
    } catch (err) {
      console.error(`error reading ${path}: ${(err as Error).message}`);
      return 1;
    }
    try {
      reports.push({ report: validateReport(raw), path });
    } catch (err) {
      if (err instanceof SchemaError) {
        console.error(`schema error in ${path}: ${err.message}`);
        return 1;
      }
      throw err;
    }
  }

  mkdirSync(outDir, { recursive: true });
  try {
    const manifest = render(reports, outDir);
    for (const entry of manifest) {
      console.log(`${entry.problem} -> ${entry.file} [${entry.curves.join(", ")}]`);
    }
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
      return 1;
    }
    throw err;
  }
  return 0;
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
