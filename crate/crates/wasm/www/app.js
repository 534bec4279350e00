import init, { simulate, renderStep, djPreset } from "./pkg/stateogram_wasm.js";

const EXAMPLES = {
  "Single qubit, phases ±π/2":
    '{"version":"1","qubits":1,"init":[0],"columns":[[{"gate":"H","targets":[0]}],[{"gate":"Z","targets":[0]}],[{"gate":"X","targets":[0]}],[{"gate":"S","targets":[0]}],[{"gate":"X","targets":[0]}],[{"gate":"S","targets":[0]}]]}',
  "Eight-term superposition":
    '{"version":"1","qubits":3,"init":[1,1,0],"columns":[[{"gate":"H","targets":[0]},{"gate":"H","targets":[1]},{"gate":"H","targets":[2]}],[{"gate":"X","targets":[0]}],[{"gate":"S","targets":[0]}],[{"gate":"X","targets":[0]}],[{"gate":"S","targets":[0]}]]}',
  "Hadamard twice":
    '{"version":"1","qubits":1,"init":[0],"columns":[[{"gate":"H","targets":[0]}],[{"gate":"H","targets":[0]}]]}',
  "Bell state":
    '{"version":"1","qubits":2,"init":[0,0],"columns":[[{"gate":"H","targets":[1]}],[{"gate":"CNOT","targets":[1,0]}]]}',
};

const $ = (id) => document.getElementById(id);
let trace = null;
let circuitText = "";

function showError(e) {
  $("error").textContent = e ? String(e.message ?? e) : "";
}

function fmt(x) {
  return x.toFixed(4);
}

function ket(b, n) {
  return "|" + b.toString(2).padStart(n, "0") + "⟩";
}

function drawStep() {
  if (!trace) return;
  const k = Number($("step").value);
  const step = trace.steps[k];
  $("step-label").textContent =
    k === 0 ? "initial state" : `after column ${step.column_index} of ${trace.steps.length - 1}`;
  try {
    $("plot").innerHTML = renderStep(circuitText, k, 640, 400);
  } catch (e) {
    showError(e);
    return;
  }
  const n = step.state.n;
  const angles = new Map(step.layout.bars.map((bar) => [bar.b, bar.angle]));
  const rows = step.state.amps.map(([re, im], b) => {
    const p = re * re + im * im;
    const angle = angles.has(b) ? fmt(angles.get(b)) : "n/a";
    const cls = angles.has(b) ? "" : ' class="vanishing"';
    const sign = im < 0 ? "-" : "+";
    return `<tr${cls}><td>${ket(b, n)}</td><td>${fmt(re)} ${sign} ${fmt(Math.abs(im))}i</td><td>${fmt(p)}</td><td>${angle}</td></tr>`;
  });
  $("amps").innerHTML = rows.join("");
}

function runSimulation() {
  showError(null);
  const text = $("circuit").value;
  try {
    trace = JSON.parse(simulate(text));
  } catch (e) {
    trace = null;
    $("plot").innerHTML = "";
    $("amps").innerHTML = "";
    showError(e);
    return;
  }
  circuitText = text;
  $("step").max = String(trace.steps.length - 1);
  $("step").value = $("step").max;
  drawStep();
}

function buildDj() {
  showError(null);
  try {
    $("circuit").value = djPreset(
      $("dj-kind").value,
      Number($("dj-mask").value),
      $("dj-negate").checked,
      Number($("dj-n").value),
    );
  } catch (e) {
    showError(e);
    return;
  }
  runSimulation();
}

async function main() {
  await init();
  for (const name of Object.keys(EXAMPLES)) {
    const opt = document.createElement("option");
    opt.textContent = name;
    $("example").append(opt);
  }
  $("load-example").addEventListener("click", () => {
    $("circuit").value = EXAMPLES[$("example").value];
    runSimulation();
  });
  $("dj-build").addEventListener("click", buildDj);
  $("simulate").addEventListener("click", runSimulation);
  $("step").addEventListener("input", drawStep);
  $("circuit").value = EXAMPLES[Object.keys(EXAMPLES)[0]];
  runSimulation();
}

main().catch(showError);
