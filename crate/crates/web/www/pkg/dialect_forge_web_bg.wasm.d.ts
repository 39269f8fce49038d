/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_survey_free: (a: number, b: number) => void;
export const distance_matrix: () => [number, number];
export const fixtures: () => [number, number];
export const profile_names: () => [number, number];
export const survey_answer: (a: number, b: number, c: number) => [number, number, number, number];
export const survey_new: () => number;
export const survey_view: (a: number) => [number, number];
export const transform: (a: number, b: number, c: number, d: number, e: bigint, f: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
