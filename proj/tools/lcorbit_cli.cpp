// Placeholder main; the real CLI is assembled once the library modules land.
int main() { return 0; }
