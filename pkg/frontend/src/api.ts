export interface MoveWire {
    amount: number;
    targets: number[];
}

export interface Analysis {
    status: 'P' | 'N';
    winningMoves: MoveWire[];
}

export interface StepResponse {
    schema: number;
    applied: number[];
    engineReply: MoveWire | null;
    state: number[];
    status: 'human_to_move' | 'engine_to_move' | 'human_won' | 'engine_won';
    analysis: Analysis | null;
}

export class ApiError extends Error {
    constructor(message: string, readonly status: number) {
        super(message);
    }
}

async function post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(path, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify(body),
    });
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
        throw new ApiError(payload.error ?? `request failed (${response.status})`, response.status);
    }
    return payload as T;
}

export const gameApi = {
    evalPosition: (jars: number[]): Promise<Analysis> =>
        post('/api/game/eval', { jars }),

    step: (jars: number[], move?: MoveWire): Promise<StepResponse> =>
        post('/api/game/step', move ? { jars, move } : { jars }),
};
