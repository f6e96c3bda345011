#include <cstdio>
int main() { std::puts("gcx placeholder"); return 0; }
