/* tslint:disable */
/* eslint-disable */

/**
 * Rank, polygon, pairing, zonotope bounds and an SVG of the supports.
 */
export function analyze(system_json: string): string;

/**
 * Names of the bundled example systems.
 */
export function fixture_names(): string;

/**
 * The `{"matrix", "c"}` text of a bundled system, for the editor.
 */
export function fixture_system(name: string): string;

/**
 * Line-based bound and Δ1 test for a `{"terms": [[s, t, c], ...]}` polynomial.
 */
export function poly_estimate(poly_json: string): string;

/**
 * Sum bound for whitespace or comma separated class indices.
 */
export function sum_estimate(bounds: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze: (a: number, b: number) => [number, number];
    readonly fixture_names: () => [number, number];
    readonly fixture_system: (a: number, b: number) => [number, number];
    readonly poly_estimate: (a: number, b: number) => [number, number];
    readonly sum_estimate: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
