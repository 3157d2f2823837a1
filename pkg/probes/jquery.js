var jq = window.jQuery || window.$ || window.$jq || window.$j;
if (jq && jq.fn) {
  return jq.fn.jquery || null;
}
return false;
