window.tiny=1;/*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*//*pad*/