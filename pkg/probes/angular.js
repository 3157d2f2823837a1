var ng = window.angular;
if (ng && typeof ng.module === 'function') {
  return (ng.version && ng.version.full) || null;
}
return false;
