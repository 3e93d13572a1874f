#include <cstdio>
int main(){ std::printf("orbifukaya placeholder\n"); return 2; }
