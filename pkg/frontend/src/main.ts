import { Arena } from './arena.js';
import { PRESETS } from './state.js';

const root = document.getElementById('arena') as HTMLElement;
const presetBar = document.getElementById('presets') as HTMLElement;
const hintsButton = document.getElementById('hints') as HTMLButtonElement;

const arena = new Arena(PRESETS['quick start']);

function paint(): void {
    root.innerHTML = arena.view();
}

root.addEventListener('click', async (event) => {
    const target = event.target as HTMLElement;
    const jarButton = target.closest<HTMLElement>('[data-jar]');
    if (jarButton) {
        arena.selectJar(Number(jarButton.dataset.jar));
        paint();
        return;
    }
    if (target.id === 'submit') {
        paint();  // shows the lock while the engine replies
        await arena.submitMove();
        paint();
    }
});

root.addEventListener('input', (event) => {
    const target = event.target as HTMLInputElement;
    if (target.id === 'amount') {
        arena.setAmount(Number(target.value));
        paint();
    }
});

for (const [name, jars] of Object.entries(PRESETS)) {
    const button = document.createElement('button');
    button.textContent = `${name} [${jars.join(',')}]`;
    button.addEventListener('click', () => {
        arena.reset(jars);
        paint();
    });
    presetBar.appendChild(button);
}

hintsButton.addEventListener('click', async () => {
    await arena.toggleHints();
    hintsButton.classList.toggle('on', arena.state.hintsOn);
    paint();
});

paint();
