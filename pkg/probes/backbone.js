var b = window.Backbone;
if (b && b.Model && b.View) {
  return b.VERSION || null;
}
return false;
