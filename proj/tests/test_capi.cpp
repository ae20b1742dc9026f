#include "weylkit.h"
int main(){return 0;}
