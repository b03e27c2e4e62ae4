from rhkit.cli.main import main

main()
