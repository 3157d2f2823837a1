var h = window.Handlebars;
if (h && typeof h.compile === 'function') {
  return h.VERSION || null;
}
return false;
