import type { MoveWire } from './api.js';

export interface HistoryEntry {
    actor: 'you' | 'engine';
    move: MoveWire;
    jars: number[];
}

export type Status = 'human_to_move' | 'engine_to_move' | 'human_won' | 'engine_won';

export interface ArenaState {
    jars: number[];
    selected: Set<number>;
    amount: number;
    history: HistoryEntry[];
    status: Status;
    hintsOn: boolean;
    busy: boolean;
    error: string | null;
}

export const PRESETS: Record<string, number[]> = {
    'two jars': [1, 2],
    'one cookie spare': [1, 1, 4],
    'classic pair': [3, 5, 0],
    'quick start': [1, 2, 2],
};

export function newGame(jars: number[]): ArenaState {
    return {
        jars: [...jars],
        selected: new Set(),
        amount: 1,
        history: [],
        status: 'human_to_move',
        hintsOn: false,
        busy: false,
        error: null,
    };
}

export function isGameOver(state: ArenaState): boolean {
    return state.status === 'human_won' || state.status === 'engine_won';
}

export function toggleJar(state: ArenaState, index: number): void {
    if (isGameOver(state) || state.busy) return;
    if (state.selected.has(index)) {
        state.selected.delete(index);
    } else if (state.jars[index] > 0) {
        state.selected.add(index);
    }
    state.amount = Math.min(state.amount, maxAmount(state) || 1);
}

export function setAmount(state: ArenaState, amount: number): void {
    state.amount = amount;
}

export function maxAmount(state: ArenaState): number {
    if (state.selected.size === 0) return 0;
    return Math.min(...[...state.selected].map((i) => state.jars[i]));
}

/** The rules the server would enforce; the UI never submits a breach. */
export function moveProblem(state: ArenaState): string | null {
    if (state.selected.size === 0) return 'select at least one jar';
    if (!Number.isInteger(state.amount) || state.amount < 1) return 'take a nonzero amount';
    if (state.amount > maxAmount(state)) {
        return `amount must be at most ${maxAmount(state)} (smallest selected jar)`;
    }
    return null;
}

export function canSubmit(state: ArenaState): boolean {
    return !state.busy && !isGameOver(state) && moveProblem(state) === null;
}

export function recordExchange(
    state: ArenaState,
    move: MoveWire,
    applied: number[],
    engineReply: MoveWire | null,
    finalJars: number[],
    status: Status,
): void {
    state.history.push({ actor: 'you', move, jars: [...applied] });
    if (engineReply) {
        state.history.push({ actor: 'engine', move: engineReply, jars: [...finalJars] });
    }
    state.jars = [...finalJars];
    state.status = status;
    state.selected = new Set();
    state.amount = 1;
    state.error = null;
}

/** History must replay to the current board; used by tests and hints. */
export function historyIsConsistent(state: ArenaState): boolean {
    if (state.history.length === 0) return true;
    const last = state.history[state.history.length - 1];
    return (
        last.jars.length === state.jars.length &&
        last.jars.every((v, i) => v === state.jars[i])
    );
}
