/* tslint:disable */
/* eslint-disable */

/**
 * Metric factor and scalar curvature of the Darboux III space against r² on `[0, r_sq_max]`.
 */
export function curvature_profile(dim: number, lambda: number, r_sq_max: number, points: number): string;

/**
 * Energies of every level up to `max_index` oscillator quanta while
 * `sweep` ("lambda" or "B", with ω_c = B/2) runs over `[start, end]`.
 * Levels that have no bound state at some sweep value are `null` there.
 */
export function level_diagram(model: string, dim: number, sweep: string, start: number, end: number, steps: number, lambda: number, mu_x: number, mu_y: number, field: number, max_index: number): string;

/**
 * ψ_n(x) of a line model on `[-x_max, x_max]`, normalised under its own
 * inner product.
 */
export function wavefunction_profile(model: string, n: number, lambda: number, mu: number, x_max: number, points: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly curvature_profile: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly level_diagram: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number, k: number, l: number, m: number) => [number, number, number, number];
    readonly wavefunction_profile: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
