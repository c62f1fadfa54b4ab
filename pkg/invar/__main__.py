from invar.cli import main

main()
