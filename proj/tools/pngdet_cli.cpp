// placeholder; the real CLI lands once the numeric modules are in
int main() { return 0; }
