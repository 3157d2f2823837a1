var m = window.Modernizr;
if (m && typeof m.addTest === 'function') {
  return m._version || null;
}
return false;
