var l = window._;
if (l && typeof l.forIn === 'function') {
  return l.VERSION || null;
}
return false;
