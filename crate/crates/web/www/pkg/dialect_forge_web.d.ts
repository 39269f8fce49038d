/* tslint:disable */
/* eslint-disable */

export class Survey {
    free(): void;
    [Symbol.dispose](): void;
    answer(feature: number, accept: boolean): string;
    /**
     * Candidates are the shipped dialects other than the merged profile.
     */
    constructor();
    view(): string;
}

export function distance_matrix(): string;

/**
 * The gold parses of the rule examples, for the page's sentence picker.
 */
export function fixtures(): string;

export function profile_names(): string;

export function transform(conllu: string, profile: string, seed: bigint, density: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_survey_free: (a: number, b: number) => void;
    readonly distance_matrix: () => [number, number];
    readonly fixtures: () => [number, number];
    readonly profile_names: () => [number, number];
    readonly survey_answer: (a: number, b: number, c: number) => [number, number, number, number];
    readonly survey_new: () => number;
    readonly survey_view: (a: number) => [number, number];
    readonly transform: (a: number, b: number, c: number, d: number, e: bigint, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
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
