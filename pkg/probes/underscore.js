var u = window._;
if (u && typeof u.each === 'function' && typeof u.forIn !== 'function') {
  return u.VERSION || null;
}
return false;
