// Recorded mini-fixture API payloads and a fetch stub that serves them.

import { readFileSync } from "node:fs";
import { join } from "node:path";

export function fixture<T>(name: string): T {
  const path = join(__dirname, "fixtures", `${name}.json`);
  return JSON.parse(readFileSync(path, "utf-8")) as T;
}

const ROUTES: Record<string, string> = {
  "/api/meta": "meta",
  "/api/features": "features",
  "/api/features/relatorio": "feature-relatorio",
  "/api/features/matricula": "feature-matricula",
  [`/api/files/${encodeURIComponent("fx/Turma.java")}`]: "file-turma",
  [`/api/files/${encodeURIComponent("fx/GodService.java")}`]: "file-godservice",
  "/api/entities/fx.GodService": "entity-godservice",
  [`/api/entities/${encodeURIComponent("fx.Turma#validar(Aluno)")}`]:
    "entity-validar",
  "/api/entities/fx.Constantes": "entity-constantes",
};

export function installRecordedApi(): void {
  globalThis.fetch = (async (input: RequestInfo | URL) => {
    const url = typeof input === "string" ? input : input.toString();
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const name = ROUTES[path];
    if (name === undefined) {
      return new Response(JSON.stringify({ error: "not found" }), {
        status: 404,
        headers: { "Content-Type": "application/json" },
      });
    }
    return new Response(JSON.stringify(fixture(name)), {
      status: 200,
      headers: { "Content-Type": "application/json" },
    });
  }) as typeof fetch;
}

export function installBrokenApi(): void {
  globalThis.fetch = (async () => {
    throw new TypeError("connection refused");
  }) as typeof fetch;
}

export async function settled(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
  await new Promise((resolve) => setTimeout(resolve, 0));
}

export function freshApp(): HTMLElement {
  document.body.innerHTML = '<main id="app"></main>';
  return document.getElementById("app") as HTMLElement;
}

export function texts(container: HTMLElement, selector: string): string[] {
  return Array.from(container.querySelectorAll(selector)).map(
    (node) => node.textContent ?? "",
  );
}
