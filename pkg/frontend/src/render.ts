import type { Analysis } from './api.js';
import { ArenaState, canSubmit, isGameOver, maxAmount, moveProblem } from './state.js';

const esc = (s: string) => s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');

export function renderBoard(state: ArenaState): string {
    const jars = state.jars
        .map((count, i) => {
            const selected = state.selected.has(i) ? ' selected' : '';
            const empty = count === 0 ? ' empty' : '';
            const stack = '<span class="cookie"></span>'.repeat(Math.min(count, 12));
            return (
                `<button class="jar${selected}${empty}" data-jar="${i}" ` +
                `${count === 0 ? 'disabled' : ''}>` +
                `<span class="count">${count}</span><span class="stack">${stack}</span>` +
                `<span class="label">jar ${i + 1}</span></button>`
            );
        })
        .join('');
    return `<div class="jars">${jars}</div>`;
}

export function renderControls(state: ArenaState): string {
    const max = maxAmount(state);
    const problem = moveProblem(state);
    const disabled = canSubmit(state) ? '' : 'disabled';
    const hint = problem && state.selected.size > 0 ? `<span class="problem">${esc(problem)}</span>` : '';
    return (
        `<input id="amount" type="number" min="1" max="${max || 1}" value="${state.amount}">` +
        `<button id="submit" ${disabled}>take ${state.amount} from ${state.selected.size} jar(s)</button>` +
        hint
    );
}

export function renderHistory(state: ArenaState): string {
    if (state.history.length === 0) return '<p class="muted">no moves yet</p>';
    const items = state.history
        .map((entry) => {
            const jars = entry.move.targets.map((t) => t + 1).join(',');
            return (
                `<li class="${entry.actor}">${entry.actor} took ${entry.move.amount} ` +
                `from jar(s) ${jars} &rarr; [${entry.jars.join(', ')}]</li>`
            );
        })
        .join('');
    return `<ol class="history">${items}</ol>`;
}

export function renderBanner(state: ArenaState): string {
    if (state.status === 'human_won') return '<div class="banner win">you took the last cookie - you win!</div>';
    if (state.status === 'engine_won') return '<div class="banner lose">the engine took the last cookie</div>';
    if (state.error) return `<div class="banner error">${esc(state.error)}</div>`;
    if (state.busy) return '<div class="banner muted">engine is thinking&hellip;</div>';
    return '';
}

export function renderHint(analysis: Analysis | null, hintsOn: boolean): string {
    if (!hintsOn || !analysis) return '';
    const badge = analysis.status === 'P'
        ? '<span class="badge p">losing spot for the mover</span>'
        : '<span class="badge n">winning spot for the mover</span>';
    const moves = analysis.winningMoves
        .slice(0, 4)
        .map((m) => `take ${m.amount} from jar(s) ${m.targets.map((t) => t + 1).join(',')}`)
        .join('; ');
    return `<div class="hint">${badge}${moves ? ` &mdash; ${esc(moves)}` : ''}</div>`;
}

export function renderAll(state: ArenaState, analysis: Analysis | null): string {
    return (
        renderBanner(state) +
        renderBoard(state) +
        `<div class="controls">${renderControls(state)}</div>` +
        renderHint(analysis, state.hintsOn) +
        `<section class="log">${renderHistory(state)}</section>`
    );
}

export { isGameOver };
