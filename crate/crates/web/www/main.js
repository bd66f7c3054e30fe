import init, { interval_explorer, classify_document, compare_documents } from "./pkg/torus_strata_web.js";

const $ = (id) => document.getElementById(id);
const show = (id, json) => { $(id).textContent = JSON.stringify(JSON.parse(json), null, 2); };

await init();

$("explore").onclick = () =>
  show("explore-out", interval_explorer($("a").value, $("b").value, $("c").value, $("d").value));
$("classify").onclick = () => show("classify-out", classify_document($("doc").value));
$("compare").onclick = () =>
  show("compare-out", compare_documents($("left").value, $("right").value, $("weak").checked));
