import { Analysis, ApiError, gameApi, MoveWire } from './api.js';
import {
    ArenaState,
    canSubmit,
    isGameOver,
    moveProblem,
    newGame,
    recordExchange,
    setAmount,
    toggleJar,
} from './state.js';
import { renderAll } from './render.js';

/** Drives one game: mutates state, talks to the API, renders to HTML.
 *
 * One request in flight at a time; the board locks while the engine
 * replies.  A transport failure keeps the submitted move un-applied so
 * the player can retry.
 */
export class Arena {
    state: ArenaState;
    analysis: Analysis | null = null;

    constructor(jars: number[]) {
        this.state = newGame(jars);
    }

    view(): string {
        return renderAll(this.state, this.analysis);
    }

    selectJar(index: number): void {
        toggleJar(this.state, index);
    }

    setAmount(amount: number): void {
        setAmount(this.state, amount);
    }

    canSubmit(): boolean {
        return canSubmit(this.state);
    }

    /** Client-side rule check; null when the pending move is legal. */
    problem(): string | null {
        return moveProblem(this.state);
    }

    async submitMove(): Promise<void> {
        if (!this.canSubmit()) return;  // illegal moves never reach the wire
        const move: MoveWire = {
            amount: this.state.amount,
            targets: [...this.state.selected].sort((a, b) => a - b),
        };
        this.state.busy = true;
        this.state.error = null;
        try {
            const reply = await gameApi.step(this.state.jars, move);
            recordExchange(
                this.state, move, reply.applied, reply.engineReply, reply.state, reply.status,
            );
            this.analysis = reply.analysis;
        } catch (err) {
            // board state is untouched: safe to retry
            this.state.error = err instanceof ApiError ? err.message : 'network error - try again';
        } finally {
            this.state.busy = false;
        }
    }

    async toggleHints(): Promise<void> {
        this.state.hintsOn = !this.state.hintsOn;
        if (this.state.hintsOn && !isGameOver(this.state)) {
            try {
                this.analysis = await gameApi.evalPosition(this.state.jars);
            } catch {
                this.analysis = null;
            }
        }
    }

    reset(jars: number[]): void {
        const hints = this.state.hintsOn;
        this.state = newGame(jars);
        this.state.hintsOn = hints;
        this.analysis = null;
    }
}
