var app = {};
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
/* application code */
