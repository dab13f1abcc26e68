from ialcbench.cli import main

main()
