var m = window.moment;
if (m && typeof m.isMoment === 'function') {
  return m.version || null;
}
return false;
